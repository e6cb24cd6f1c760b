"""Rays of the fan on which the lct function is piecewise well behaved.

The orthant is cut by the coordinate hyperplanes and by the hyperplanes with
normals ``M+_i - M-_i`` and ``M^s_i - M^t_j`` (i != j, s, t in {+, -}).
Every ray of the resulting fan is the solution line of n-1 independent
normals, so brute-force subset enumeration finds all of them.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .ideal import GeneralBinomialIdeal, IdealTriple
from .lct_eval import LctBreakdown, LctFunction
from .linalg import INF, ExtRational, IntMatrix, IntVector, nullspace_ray, primitive, rank_over_Q


@dataclass(frozen=True)
class HyperplaneSet:
    rows: IntMatrix
    identity_count: int


@dataclass(frozen=True)
class RayTable:
    rays: tuple[IntVector, ...]
    breakdowns: tuple[LctBreakdown, ...]
    global_lct: ExtRational
    argmin: tuple[IntVector, ...]
    hyperplanes: HyperplaneSet
    subsets: int

    @property
    def star_min(self) -> ExtRational:
        return min((b.star for b in self.breakdowns), default=INF)

    def row(self, ray: Sequence[int]) -> LctBreakdown:
        ray = tuple(ray)
        for r, b in zip(self.rays, self.breakdowns):
            if r == ray:
                return b
        raise KeyError(ray)


def _difference_rows(plus: IntMatrix, minus: IntMatrix) -> list[IntVector]:
    r = len(plus)
    out = [tuple(p - m for p, m in zip(plus[i], minus[i])) for i in range(r)]
    for i, j in itertools.combinations(range(r), 2):
        for s in (plus, minus):
            for t in (plus, minus):
                out.append(tuple(x - y for x, y in zip(s[i], t[j])))
    return out


def hyperplane_rows(triple: IdealTriple) -> HyperplaneSet:
    """Coordinate normals plus the pruned, primitive, deduplicated difference normals."""
    n = triple.n
    rows: list[IntVector] = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(rows)
    for d in _difference_rows(triple.plus, triple.minus):
        if all(x >= 0 for x in d) or all(x <= 0 for x in d):
            # covers the zero row; such hyperplanes meet the orthant in faces only
            continue
        p = primitive(d)
        if p not in seen:
            seen.add(p)
            rows.append(p)
    return HyperplaneSet(tuple(rows), n)


def enumerate_rays(h: HyperplaneSet) -> tuple[list[IntVector], int]:
    """Orthant rays cut out by n-1 independent rows; returns (sorted rays, subsets tried)."""
    rows = h.rows
    n = len(rows[0])
    if n == 1:
        return [(1,)], 0
    found: set[IntVector] = set()
    tried = 0
    # depth-first over index subsets, pruning rank-deficient partial choices
    m = len(rows)

    def extend(start: int, chosen: list[IntVector]) -> None:
        nonlocal tried
        if len(chosen) == n - 1:
            tried += 1
            w = nullspace_ray(chosen)
            if w is None:
                return
            if all(x <= 0 for x in w):
                w = tuple(-x for x in w)
            if all(x >= 0 for x in w):
                found.add(w)
            return
        for k in range(start, m - (n - 1 - len(chosen)) + 1):
            nxt = chosen + [rows[k]]
            if len(nxt) > 1 and rank_over_Q(nxt) < len(nxt):
                continue
            extend(k + 1, nxt)

    extend(0, [])
    return sorted(found), tried


def _thread_count(threads: Optional[int]) -> int:
    if threads is None:
        threads = int(os.environ.get("LCT_THREADS", "1") or 1)
    return max(1, threads)


def evaluate_rays(triple: IdealTriple, rays: Sequence[IntVector], threads: Optional[int] = None) -> list[LctBreakdown]:
    f = LctFunction(triple)
    k = _thread_count(threads)
    if k == 1 or len(rays) < 2:
        return [f.evaluate(v) for v in rays]
    # map preserves input order, so the table layout is thread-independent
    with ThreadPoolExecutor(max_workers=k) as pool:
        return list(pool.map(f.evaluate, rays))


def global_lct(ideal: GeneralBinomialIdeal, threads: Optional[int] = None) -> RayTable:
    triple = ideal.triple()
    h = hyperplane_rows(triple)
    rays, tried = enumerate_rays(h)
    bds = evaluate_rays(triple, rays, threads)
    best = min((b.value for b in bds), default=INF)
    argmin = tuple(r for r, b in zip(rays, bds) if b.value == best)
    return RayTable(tuple(rays), tuple(bds), best, argmin, h, tried)
