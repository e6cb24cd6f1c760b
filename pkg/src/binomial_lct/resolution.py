"""Constructive pseudo-resolution by star subdivisions at 2-faces.

The fan lives in the nonnegative orthant and starts as the single regular
cone spanned by the standard basis. Each generator ``x^a - u x^b`` is tracked
through its exponent vectors in vertex coordinates (``a[k] = a . v_k``).
Blow-up centres are chosen by the invariant ``(L, Lp)``: the largest gap
``|beta_i - beta_j|`` over 2-faces carrying opposite signs, and how many
2-faces attain it. Blowing up one of those faces lowers the pair
lexicographically, which is what makes the loops below terminate.
"""

from __future__ import annotations

import heapq
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .ideal import GeneralBinomialIdeal
from .lct_eval import LctFunction
from .linalg import INF, ExtRational, IntVector, det

Face = tuple[int, int]


@dataclass(frozen=True)
class ResolutionFan:
    vertices: tuple[IntVector, ...]
    cones: tuple[tuple[int, ...], ...]  # maximal cones as vertex index tuples

    @classmethod
    def orthant(cls, n: int) -> "ResolutionFan":
        basis = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return cls(basis, (tuple(range(n)),))

    @property
    def n(self) -> int:
        return len(self.vertices[0])

    def two_faces(self) -> set[Face]:
        faces = set()
        for cone in self.cones:
            faces.update(itertools.combinations(sorted(cone), 2))
        return faces

    def cone_det(self, cone: Sequence[int]) -> int:
        return det([self.vertices[k] for k in cone])


@dataclass(frozen=True)
class TransformState:
    """Total transforms of the generators in vertex coordinates."""

    a: tuple[IntVector, ...]
    b: tuple[IntVector, ...]
    binomial: tuple[bool, ...]

    @classmethod
    def initial(cls, ideal: GeneralBinomialIdeal) -> "TransformState":
        return cls(
            tuple(g.a for g in ideal.generators),
            tuple(g.b for g in ideal.generators),
            tuple(not g.is_monomial for g in ideal.generators),
        )

    def beta(self, i: int) -> IntVector:
        return tuple(x - y for x, y in zip(self.a[i], self.b[i]))

    def alpha(self, i: int) -> IntVector:
        return tuple(min(x, y) for x, y in zip(self.a[i], self.b[i]))


@dataclass(frozen=True)
class Target:
    """What a resolve loop flattens: a generator's beta, or alpha_i - alpha_j."""

    kind: str  # "beta" or "alpha"
    i: int
    j: int = -1

    @classmethod
    def beta(cls, i: int) -> "Target":
        return cls("beta", i)

    @classmethod
    def alpha_gap(cls, i: int, j: int) -> "Target":
        return cls("alpha", i, j)

    @property
    def label(self) -> str:
        if self.kind == "beta":
            return f"beta{self.i + 1}"
        return f"alpha{self.i + 1}-alpha{self.j + 1}"

    def at(self, a, b, k: int) -> int:
        if self.kind == "beta":
            return a[self.i][k] - b[self.i][k]
        return min(a[self.i][k], b[self.i][k]) - min(a[self.j][k], b[self.j][k])

    def vector(self, state: TransformState) -> IntVector:
        return tuple(self.at(state.a, state.b, k) for k in range(len(state.a[0])))


@dataclass(frozen=True, order=True)
class LPair:
    L: int
    Lp: int


@dataclass(frozen=True)
class TraceStep:
    step: int
    target: str
    face: Face
    center: tuple[IntVector, IntVector]
    new_vertex: IntVector
    before: LPair
    after: LPair


@dataclass
class Resolution:
    fan: ResolutionFan
    state: TransformState
    trace: list[TraceStep] = field(default_factory=list)


def star_subdivide(fan: ResolutionFan, state: TransformState, face: Face) -> tuple[ResolutionFan, TransformState]:
    i, j = face
    if i == j or not any(i in c and j in c for c in fan.cones):
        raise ValueError(f"{face} is not a 2-face of the fan")
    new = len(fan.vertices)
    v_new = tuple(x + y for x, y in zip(fan.vertices[i], fan.vertices[j]))
    cones = []
    for c in fan.cones:
        if i in c and j in c:
            cones.append(tuple(new if k == i else k for k in c))
            cones.append(tuple(new if k == j else k for k in c))
        else:
            cones.append(c)
    a = tuple(e + (e[i] + e[j],) for e in state.a)
    b = tuple(e + (e[i] + e[j],) for e in state.b)
    return ResolutionFan(fan.vertices + (v_new,), tuple(cones)), TransformState(a, b, state.binomial)


def l_invariant(beta: Sequence[int], fan: ResolutionFan) -> LPair:
    if len(beta) != len(fan.vertices):
        raise ValueError("beta must have one entry per vertex")
    gaps = [abs(beta[i] - beta[j]) for i, j in fan.two_faces() if beta[i] * beta[j] < 0]
    if not gaps:
        return LPair(0, 0)
    top = max(gaps)
    return LPair(top, gaps.count(top))


class _Engine:
    """Mutable fan with a face -> cones index, so one blow-up costs O(affected cones)."""

    def __init__(self, fan: ResolutionFan, state: TransformState, check: bool = False):
        self.vertices = list(fan.vertices)
        self.cones: dict[int, tuple[int, ...]] = dict(enumerate(fan.cones))
        self.next_id = len(fan.cones)
        self.faces: dict[Face, set[int]] = {}
        for cid, c in self.cones.items():
            self._index(cid, c)
        self.a = [list(e) for e in state.a]
        self.b = [list(e) for e in state.b]
        self.binomial = state.binomial
        self.check = check
        self.trace: list[TraceStep] = []

    def _index(self, cid: int, cone: tuple[int, ...]) -> None:
        for f in itertools.combinations(sorted(cone), 2):
            self.faces.setdefault(f, set()).add(cid)

    def _unindex(self, cid: int, cone: tuple[int, ...]) -> None:
        for f in itertools.combinations(sorted(cone), 2):
            s = self.faces[f]
            s.discard(cid)
            if not s:
                del self.faces[f]

    def blow_up(self, face: Face) -> list[Face]:
        """Star subdivision at ``face``; returns the new 2-faces.

        Only ``face`` itself disappears, and every new face contains the new vertex.
        """
        i, j = face
        hit = sorted(self.faces.get(face, ()))
        if not hit:
            raise ValueError(f"{face} is not a 2-face of the fan")
        new = len(self.vertices)
        self.vertices.append(tuple(x + y for x, y in zip(self.vertices[i], self.vertices[j])))
        for rows in (self.a, self.b):
            for e in rows:
                e.append(e[i] + e[j])
        added: set[Face] = set()
        for cid in hit:
            c = self.cones.pop(cid)
            self._unindex(cid, c)
            for old in (i, j):
                nc = tuple(new if k == old else k for k in c)
                if self.check and abs(det([self.vertices[k] for k in nc])) != 1:
                    raise AssertionError(f"non-regular cone {nc} after blowing up {face}")
                self.cones[self.next_id] = nc
                self._index(self.next_id, nc)
                self.next_id += 1
                added.update((k, new) for k in nc if k != new)
        return sorted(added)

    def resolve(self, target: Target) -> None:
        vals: list[int] = []
        gaps: Counter[int] = Counter()
        heap: list[tuple[int, int, int]] = []

        def value(k: int) -> int:
            while len(vals) <= k:
                vals.append(target.at(self.a, self.b, len(vals)))
            return vals[k]

        def admit(f: Face) -> None:
            x, y = value(f[0]), value(f[1])
            if x * y < 0:
                g = abs(x - y)
                gaps[g] += 1
                heapq.heappush(heap, (-g, f[0], f[1]))

        def top() -> tuple[LPair, Optional[Face]]:
            while heap:
                g, p, q = heap[0]
                if (p, q) in self.faces:
                    return LPair(-g, gaps[-g]), (p, q)
                heapq.heappop(heap)
            return LPair(0, 0), None

        for f in self.faces:
            admit(f)
        pair, face = top()
        while face is not None:
            heapq.heappop(heap)
            gaps[pair.L] -= 1
            for f in self.blow_up(face):
                admit(f)
            after, nxt = top()
            if not after < pair:
                raise AssertionError(f"(L, Lp) did not descend: {pair} -> {after}")
            i, j = face
            self.trace.append(
                TraceStep(
                    len(self.trace) + 1, target.label, face,
                    (self.vertices[i], self.vertices[j]), self.vertices[-1], pair, after,
                )
            )
            pair, face = after, nxt

    def fan(self) -> ResolutionFan:
        return ResolutionFan(tuple(self.vertices), tuple(self.cones.values()))

    def state(self) -> TransformState:
        return TransformState(tuple(map(tuple, self.a)), tuple(map(tuple, self.b)), self.binomial)


def resolve_target(
    fan: ResolutionFan, state: TransformState, target: Target, check: bool = False
) -> tuple[ResolutionFan, TransformState, list[TraceStep]]:
    """Blow up until the target vector has no opposite signs on any 2-face."""
    eng = _Engine(fan, state, check)
    eng.resolve(target)
    return eng.fan(), eng.state(), eng.trace


def pseudo_resolve(ideal: GeneralBinomialIdeal, check: bool = False) -> Resolution:
    """Weakly resolve every binomial, then order the monomial parts pairwise."""
    eng = _Engine(ResolutionFan.orthant(ideal.n), TransformState.initial(ideal), check)
    r = len(ideal.generators)
    for i in range(r):
        if eng.binomial[i]:
            eng.resolve(Target.beta(i))
    for i, j in itertools.combinations(range(r), 2):
        eng.resolve(Target.alpha_gap(i, j))
    return Resolution(eng.fan(), eng.state(), eng.trace)


def _opposite(vec: Sequence[int], cone: Sequence[int]) -> bool:
    vals = [vec[k] for k in cone]
    return any(x > 0 for x in vals) and any(x < 0 for x in vals)


def assert_pseudo_resolved(fan: ResolutionFan, state: TransformState) -> tuple[bool, Optional[str]]:
    """(True, None) if every maximal cone is hyperbolic and alpha-ordered, else the first violation."""
    r = len(state.a)
    betas = [state.beta(i) for i in range(r)]
    alphas = [state.alpha(i) for i in range(r)]
    pairs = list(itertools.combinations(range(r), 2))
    gaps = [[x - y for x, y in zip(alphas[i], alphas[j])] for i, j in pairs]
    for c in fan.cones:
        for i in range(r):
            if state.binomial[i] and _opposite(betas[i], c):
                return False, f"generator {i + 1} is not hyperbolic on cone {c}"
        for (i, j), d in zip(pairs, gaps):
            if _opposite(d, c):
                return False, f"alpha{i + 1} and alpha{j + 1} are incomparable on cone {c}"
    return True, None


def lct_via_resolution(ideal: GeneralBinomialIdeal, resolution: Optional[Resolution] = None) -> ExtRational:
    if resolution is None:
        resolution = pseudo_resolve(ideal)
    f = LctFunction(ideal.triple())
    return min((f.value(v) for v in resolution.fan.vertices), default=INF)
