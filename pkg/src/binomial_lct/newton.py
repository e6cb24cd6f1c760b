"""Newton polyhedra of monomial ideals and Howald's threshold formula.

The threshold of ``<z^g_1, ..., z^g_q>`` with divisor ``z^c`` is computed two
ways that share no code path:

* ratio form: minimise ``(c+1).v / min_i g_i.v`` over the rays of the fan
  cut out by the differences ``g_i - g_j``;
* membership form: ``1/m`` for the least ``m`` with ``m (c+1)`` in the
  Newton polyhedron, found by an exact LP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import simplex
from .gamma_fan import enumerate_rays, hyperplane_rows
from .ideal import IdealTriple
from .linalg import INF, ExtRational, IntVector, dot, ratio


@dataclass(frozen=True)
class NewtonPolyhedron:
    generators: tuple[IntVector, ...]

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        if not gens:
            raise ValueError("a Newton polyhedron needs at least one generator")
        if len({len(g) for g in gens}) != 1:
            raise ValueError("generators of different dimensions")
        if any(x < 0 for g in gens for x in g):
            raise ValueError("generators must be nonnegative")
        object.__setattr__(self, "generators", gens)

    @property
    def n(self) -> int:
        return len(self.generators[0])


@dataclass(frozen=True)
class DivisorShift:
    c: IntVector

    def __post_init__(self):
        if any(x < 0 for x in self.c):
            raise ValueError("divisor exponents must be nonnegative")


def newton_contains(p: NewtonPolyhedron, q: Sequence) -> bool:
    """Is q >= sum(lam_i g_i) for some convex combination lam?"""
    if len(q) != p.n:
        raise ValueError(f"point has dimension {len(q)}, polyhedron has {p.n}")
    gens = p.generators
    k = len(gens)
    # variables: lam_1..lam_k, slack_1..slack_n
    A = [[g[i] for g in gens] + [int(j == i) for j in range(p.n)] for i in range(p.n)]
    A.append([1] * k + [0] * p.n)
    b = [Fraction(x) for x in q] + [1]
    return simplex.solve([0] * (k + p.n), A, b) is not None


def min_multiple_inside(p: NewtonPolyhedron, w: Sequence[int]) -> Fraction:
    """Least m >= 0 with m*w in the polyhedron."""
    gens = p.generators
    k, n = len(gens), p.n
    # variables: lam_1..lam_k, m, slack_1..slack_n ;  sum lam g_i - m w_i + s_i = 0
    A = [[g[i] for g in gens] + [-w[i]] + [int(j == i) for j in range(n)] for i in range(n)]
    A.append([1] * k + [0] + [0] * n)
    b = [0] * n + [1]
    cost = [0] * k + [1] + [0] * n
    res = simplex.solve(cost, A, b)
    if res is None:
        raise ValueError("no multiple of w lies in the polyhedron")
    return res[0]


def _monomial_triple(p: NewtonPolyhedron) -> IdealTriple:
    return IdealTriple(p.generators, p.generators, tuple(Fraction(0) for _ in p.generators))


def candidate_rays(p: NewtonPolyhedron) -> list[IntVector]:
    return enumerate_rays(hyperplane_rows(_monomial_triple(p)))[0]


def howald_lct_ratio(p: NewtonPolyhedron, shift: DivisorShift | None = None) -> ExtRational:
    w = _weights(p, shift)
    best: ExtRational = INF
    for v in candidate_rays(p):
        val = ratio(dot(w, v), min(dot(g, v) for g in p.generators))
        best = min(best, val)
    return best


def howald_lct_membership(p: NewtonPolyhedron, shift: DivisorShift | None = None) -> ExtRational:
    m = min_multiple_inside(p, _weights(p, shift))
    return INF if m == 0 else 1 / m


def howald_lct(p: NewtonPolyhedron, shift: DivisorShift | None = None) -> ExtRational:
    if any(not any(g) for g in p.generators):
        raise ValueError("the zero exponent generates the unit ideal")
    a = howald_lct_ratio(p, shift)
    b = howald_lct_membership(p, shift)
    if a != b:
        raise ArithmeticError(f"Howald forms disagree: ratio {a}, membership {b}")
    return a


def _weights(p: NewtonPolyhedron, shift: DivisorShift | None) -> IntVector:
    if shift is None:
        return (1,) * p.n
    if len(shift.c) != p.n:
        raise ValueError("divisor dimension mismatch")
    return tuple(x + 1 for x in shift.c)
