"""A small exact two-phase simplex over the rationals.

Solves ``min c.x  s.t.  A x = b, x >= 0`` with Bland's rule, so it never
cycles. Dense tableau; meant for the handful of variables that Newton
polyhedra of desk-sized ideals produce.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


class Unbounded(ArithmeticError):
    pass


def _pivot(tab: list[list[Fraction]], row: int, col: int) -> None:
    p = tab[row][col]
    tab[row] = [x / p for x in tab[row]]
    pr = tab[row]
    for i, r in enumerate(tab):
        if i != row and r[col] != 0:
            f = r[col]
            tab[i] = [x - f * y for x, y in zip(r, pr)]


def _run(tab: list[list[Fraction]], basis: list[int], ncols: int) -> None:
    """Optimise the tableau whose last row is the reduced cost row (minimisation)."""
    m = len(basis)
    while True:
        cost = tab[m]
        col = next((j for j in range(ncols) if cost[j] < 0), None)
        if col is None:
            return
        best = None
        for i in range(m):
            a = tab[i][col]
            if a > 0:
                q = tab[i][-1] / a
                if best is None or q < best[0] or (q == best[0] and basis[i] < basis[best[1]]):
                    best = (q, i)
        if best is None:
            raise Unbounded("objective is unbounded below")
        _pivot(tab, best[1], col)
        basis[best[1]] = col


def solve(
    c: Sequence, A: Sequence[Sequence], b: Sequence
) -> Optional[tuple[Fraction, list[Fraction]]]:
    """Return (optimum, x) or None if infeasible. Raises Unbounded."""
    m, n = len(A), len(c)
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # phase one: artificial variables n .. n+m-1
    tab = [A[i] + [Fraction(int(k == i)) for k in range(m)] + [b[i]] for i in range(m)]
    cost = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n):
            cost[j] -= A[i][j]
        cost[-1] -= b[i]
    tab.append(cost)
    basis = list(range(n, n + m))
    _run(tab, basis, n + m)
    if tab[m][-1] != 0:
        return None
    # drive remaining artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, i, col)
                basis[i] = col
    keep = [i for i in range(m) if basis[i] < n]
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    cost = [Fraction(x) for x in c] + [Fraction(0)]
    for i, bv in enumerate(basis):
        f = cost[bv]
        if f:
            cost = [x - f * y for x, y in zip(cost, tab[i])]
    tab.append(cost)
    _run(tab, basis, n)
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = tab[i][-1]
    return -tab[-1][-1], x
