"""Pointwise evaluation of the combinatorial lct function of a triple.

For a direction ``v`` in the nonnegative orthant the value is the minimum of
the rank term (finite only when the whole ideal is proper on the torus) and a
chain of fractions built from the sorted monomial orders ``alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .ideal import IdealTriple
from .linalg import INF, ExtRational, IntVector, dot, rank_over_Q, ratio
from .torus import TorusOracle


@dataclass(frozen=True)
class LctBreakdown:
    """Every intermediate quantity of one evaluation. Indices are 1-based."""

    v: IntVector
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    epsilon: tuple[int, ...]
    r0: int
    n_seq: tuple[int, ...]
    s0: int
    s_rank: int
    tilde_s: ExtRational
    s_v: int
    candidates: tuple[ExtRational, ...]
    value: ExtRational
    star: ExtRational


class LctFunction:
    """The lct function of a fixed triple; caches torus tests across calls."""

    def __init__(self, triple: IdealTriple):
        self.triple = triple
        self.M = triple.difference
        self.s_rank = rank_over_Q(self.M)
        self.torus = TorusOracle(triple)
        self._span_cache: dict[tuple[int, ...], bool] = {}

    def _independent_of(self, chosen: tuple[int, ...], j: int) -> bool:
        key = chosen + (j,)
        hit = self._span_cache.get(key)
        if hit is None:
            rows = [self.M[i] for i in chosen]
            hit = rank_over_Q(rows + [self.M[j]]) > rank_over_Q(rows)
            self._span_cache[key] = hit
        return hit

    def _check_v(self, v: Sequence[int]) -> IntVector:
        v = tuple(int(x) for x in v)
        if len(v) != self.triple.n:
            raise ValueError(f"direction has length {len(v)}, expected {self.triple.n}")
        if any(x < 0 for x in v):
            raise ValueError("direction must have nonnegative entries")
        if not any(v):
            raise ValueError("direction must be nonzero")
        return v

    def evaluate(self, v: Sequence[int], epsilon: Optional[Sequence[int]] = None) -> LctBreakdown:
        """Evaluate at ``v``. ``epsilon`` (1-based) overrides the stable sort."""
        v = self._check_v(v)
        t = self.triple
        r = t.r
        plus_v = [dot(row, v) for row in t.plus]
        minus_v = [dot(row, v) for row in t.minus]
        alpha = tuple(min(p, m) for p, m in zip(plus_v, minus_v))
        beta = tuple(p - m for p, m in zip(plus_v, minus_v))

        if epsilon is None:
            eps = sorted(range(r), key=lambda i: (alpha[i], i))
        else:
            eps = [e - 1 for e in epsilon]
            if sorted(eps) != list(range(r)):
                raise ValueError("epsilon must be a permutation of 1..r")
            if any(alpha[eps[k]] > alpha[eps[k + 1]] for k in range(r - 1)):
                raise ValueError("epsilon does not sort alpha")

        r0 = self.torus.r_zero(eps)

        # positions (1-based into eps) whose rows of M start a new span
        n_seq: list[int] = []
        chosen: tuple[int, ...] = ()
        for j in range(1, r0):
            if not n_seq or self._independent_of(chosen, eps[j - 1]):
                n_seq.append(j)
                chosen += (eps[j - 1],)
        s0 = len(n_seq)

        # the chain of positions feeding the fractions; r0 closes it only
        # when some prefix is a torus unit
        chain = n_seq + ([r0] if r0 <= r else [])

        bound = min(s0 + 1, r)
        s_v = 1
        while s_v < bound and beta[eps[n_seq[s_v - 1] - 1]] == 0:
            s_v += 1

        size = sum(v)
        a = [alpha[eps[p - 1]] for p in chain]
        fractions = []
        for k in range(min(s_v, len(chain))):
            num = size + sum(a[k] - a[j] for j in range(k))
            fractions.append(ratio(num, a[k]))

        tilde_s = self.s_rank if r0 == r + 1 else INF
        candidates = (tilde_s, *fractions)
        return LctBreakdown(
            v=v,
            alpha=alpha,
            beta=beta,
            epsilon=tuple(e + 1 for e in eps),
            r0=r0,
            n_seq=tuple(n_seq),
            s0=s0,
            s_rank=self.s_rank,
            tilde_s=tilde_s,
            s_v=s_v,
            candidates=candidates,
            value=min(candidates),
            star=fractions[0],
        )

    def value(self, v: Sequence[int]) -> ExtRational:
        return self.evaluate(v).value

    def star(self, v: Sequence[int]) -> ExtRational:
        v = self._check_v(v)
        t = self.triple
        den = min(min(dot(p, v), dot(m, v)) for p, m in zip(t.plus, t.minus))
        return ratio(sum(v), den)


def evaluate(triple: IdealTriple, v: Sequence[int]) -> LctBreakdown:
    return LctFunction(triple).evaluate(v)


def evaluate_star(triple: IdealTriple, v: Sequence[int]) -> ExtRational:
    return LctFunction(triple).star(v)
