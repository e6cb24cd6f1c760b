"""Is a set of generators the unit ideal of the Laurent ring?

On the torus ``x^a - u x^b`` is a unit times ``1 - u x^(b-a)``. The Laurent
ideal of such binomials is proper iff the character ``d_i -> u_i`` extends
to a homomorphism on the lattice spanned by ``d_i = b_i - a_i``, i.e. iff
``prod u_i^lam_i == 1`` for every integer relation ``sum lam_i d_i = 0``.
Checking a basis of the relation lattice suffices since the map is a
homomorphism. Monomials are torus units outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .ideal import Generator, IdealTriple
from .linalg import IntVector, left_kernel_lattice


@dataclass(frozen=True)
class TorusVerdict:
    is_unit: bool
    witness: Optional[IntVector] = None
    monomial_index: Optional[int] = None  # 1-based, into the tested sequence


def character(us: Sequence[Fraction], lam: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for u, k in zip(us, lam):
        if k:
            out *= Fraction(u) ** k
    return out


def is_torus_unit(gens: Sequence[Generator]) -> TorusVerdict:
    if not gens:
        raise ValueError("empty generator set")
    for i, g in enumerate(gens):
        if g.is_monomial:
            return TorusVerdict(True, monomial_index=i + 1)
    d = [tuple(y - x for x, y in zip(g.a, g.b)) for g in gens]
    us = [g.u for g in gens]
    for lam in left_kernel_lattice(d):
        if character(us, lam) != 1:
            return TorusVerdict(True, witness=lam)
    return TorusVerdict(False)


class TorusOracle:
    """Memoised unit test for subsets of one triple's generators."""

    def __init__(self, triple: IdealTriple):
        self.gens = triple.generators
        self._cache: dict[frozenset[int], bool] = {}

    def is_unit(self, indices) -> bool:
        key = frozenset(indices)
        hit = self._cache.get(key)
        if hit is None:
            hit = is_torus_unit([self.gens[i] for i in sorted(key)]).is_unit
            self._cache[key] = hit
        return hit

    def r_zero(self, epsilon: Sequence[int]) -> int:
        """Length of the shortest unit prefix of ``epsilon`` (0-based indices); r+1 if none."""
        for j in range(1, len(epsilon) + 1):
            if self.is_unit(epsilon[:j]):
                return j
        return len(epsilon) + 1


def r_zero(triple: IdealTriple, epsilon: Sequence[int]) -> int:
    """Minimal j such that f_eps(1..j) generate the unit ideal on the torus.

    ``epsilon`` is a 1-based permutation; returns r+1 if no prefix is a unit.
    """
    if sorted(epsilon) != list(range(1, triple.r + 1)):
        raise ValueError("epsilon must be a permutation of 1..r")
    return TorusOracle(triple).r_zero([e - 1 for e in epsilon])
