"""Exact integer/rational linear algebra.

Vectors are tuples of Python ints and matrices are tuples of row tuples, so
everything here is hashable and arbitrary precision. Nothing touches floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Optional, Sequence, Union

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]


@total_ordering
class _Infinity:
    """Positive infinity that orders above every int and Fraction."""

    _instance: Optional["_Infinity"] = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self or isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash("binomial_lct.INF")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtRational = Union[Fraction, _Infinity]


def ratio(num: int, den: int) -> ExtRational:
    """num/den as an exact rational, with x/0 read as +infinity."""
    if den == 0:
        return INF
    return Fraction(num, den)


def ext_str(x: ExtRational) -> str:
    if x is INF:
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def ext_parse(text: str) -> ExtRational:
    text = text.strip()
    if text in ("inf", "+inf", "oo", "∞"):
        return INF
    return Fraction(text)


def ext_decimal(x: ExtRational, places: int = 4) -> str:
    """Truncated decimal display, e.g. 13/9 -> '1.4444'."""
    if x is INF:
        return "inf"
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaled = x.numerator * 10**places // x.denominator
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("matrix rows have different lengths")
    return m


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def rank_over_Q(m: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            ri = rows[i]
            f = ri[col]
            rows[i] = [(p * ri[k] - f * rows[rank][k]) // prev for k in range(ncols)]
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# kept for callers that only look at the sign; the value is the full determinant
det_sign = det


def primitive(v: Sequence[int]) -> IntVector:
    """Divide by the gcd of the entries and make the first nonzero entry positive."""
    g = math.gcd(*v) if len(v) else 0
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    first = next(x for x in v if x != 0)
    if first < 0:
        g = -g
    return tuple(x // g for x in v)


def left_kernel_lattice(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Basis of the lattice {lam in Z^r : lam . m = 0}.

    Unimodular row reduction of ``m`` to Hermite form, tracking the
    transformation U with U m = H. Rows of U sitting against zero rows of H
    span the relation lattice, because U is invertible over Z.
    """
    r = len(m)
    if r == 0:
        return ()
    ncols = len(m[0])
    h = [list(row) for row in m]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    top = 0
    for col in range(ncols):
        if top == r:
            break
        while True:
            nz = [i for i in range(top, r) if h[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][col]))
            h[top], h[piv] = h[piv], h[top]
            u[top], u[piv] = u[piv], u[top]
            done = True
            for i in range(top + 1, r):
                q = h[i][col] // h[top][col]
                if q:
                    h[i] = [a - q * b for a, b in zip(h[i], h[top])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[top])]
                if h[i][col] != 0:
                    done = False
            if done:
                break
        if any(h[i][col] != 0 for i in range(top, r)):
            top += 1
    basis = [tuple(u[i]) for i in range(top, r)]
    return tuple(_reduce_kernel_basis(basis))


def _reduce_kernel_basis(basis: list[IntVector]) -> list[IntVector]:
    # cosmetic: put the kernel basis itself in row echelon form with small
    # entries and a positive leading coefficient
    if not basis:
        return basis
    rows = [list(b) for b in basis]
    n = len(rows[0])
    top = 0
    for col in range(n):
        while True:
            nz = [i for i in range(top, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][col]))
            rows[top], rows[piv] = rows[piv], rows[top]
            if all(rows[i][col] == 0 for i in range(top + 1, len(rows))):
                break
            for i in range(top + 1, len(rows)):
                q = rows[i][col] // rows[top][col]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[top])]
        if any(rows[i][col] != 0 for i in range(top, len(rows))):
            if rows[top][col] < 0:
                rows[top] = [-a for a in rows[top]]
            for i in range(top):
                q = rows[i][col] // rows[top][col]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[top])]
            top += 1
        if top == len(rows):
            break
    return [tuple(r) for r in rows]


def nullspace_ray(rows: Sequence[Sequence[int]]) -> Optional[IntVector]:
    """Primitive generator of the nullspace of an (n-1) x n matrix of rank n-1.

    Returns None when the rows are rank deficient. Uses signed maximal minors
    (the generalized cross product), which vanish simultaneously exactly when
    the rank drops.
    """
    if not rows:
        raise ValueError("need at least one row")
    n = len(rows[0])
    if len(rows) != n - 1:
        raise ValueError(f"expected {n - 1} rows, got {len(rows)}")
    w = []
    for k in range(n):
        minor = [[row[j] for j in range(n) if j != k] for row in rows]
        d = det(minor)
        w.append(d if k % 2 == 0 else -d)
    if not any(w):
        return None
    return primitive(w)


def in_row_span(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """True iff v lies in the Q-span of ``basis``."""
    if not any(v):
        return True
    if not basis:
        return False
    return rank_over_Q(list(basis) + [v]) == rank_over_Q(basis)
