import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binomial_lct.linalg import dot
from binomial_lct.newton import (
    DivisorShift,
    NewtonPolyhedron,
    candidate_rays,
    howald_lct,
    howald_lct_membership,
    howald_lct_ratio,
    min_multiple_inside,
    newton_contains,
)
from binomial_lct import simplex

exponents = st.lists(st.integers(0, 4), min_size=2, max_size=2)


def two_power_contains(p, q, point):
    """<x^p, y^q>: point is above some convex combination iff the lambda interval is nonempty."""
    x, y = point
    lo = max(F(0), 1 - F(y, 1) / q)
    hi = min(F(1), F(x, 1) / p)
    return lo <= hi


def test_two_powers():
    assert howald_lct(NewtonPolyhedron(((2, 0), (0, 3)))) == F(5, 6)


def test_bisection_against_interval_oracle():
    # least m with (m, m) above the segment, located by bisection on a fine grid
    lo, hi = F(0), F(3)
    for _ in range(40):
        mid = (lo + hi) / 2
        if two_power_contains(2, 3, (mid, mid)):
            hi = mid
        else:
            lo = mid
    assert abs(1 / hi - F(5, 6)) < F(1, 10**9)


@given(st.integers(1, 9), st.integers(1, 9))
def test_two_powers_closed_form(p, q):
    assert howald_lct(NewtonPolyhedron(((p, 0), (0, q)))) == F(1, p) + F(1, q)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4))
def test_diagonal_ideals(a):
    n = len(a)
    gens = tuple(tuple(a[i] if j == i else 0 for j in range(n)) for i in range(n))
    assert howald_lct(NewtonPolyhedron(gens)) == sum(F(1, x) for x in a)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=4).filter(any))
def test_principal_monomials(a):
    assert howald_lct(NewtonPolyhedron((tuple(a),))) == F(1, max(a))


def test_divisor_shift():
    p = NewtonPolyhedron(((1, 0), (0, 1)))
    assert howald_lct(p, DivisorShift((0, 0))) == howald_lct(p) == 2
    assert howald_lct(p, DivisorShift((1, 0))) == 3
    with pytest.raises(ValueError):
        DivisorShift((-1, 0))
    with pytest.raises(ValueError):
        howald_lct(p, DivisorShift((1, 0, 0)))


def test_validation():
    with pytest.raises(ValueError):
        NewtonPolyhedron(())
    with pytest.raises(ValueError):
        NewtonPolyhedron(((1, 0), (1,)))
    with pytest.raises(ValueError):
        NewtonPolyhedron(((1, -1),))
    with pytest.raises(ValueError, match="unit ideal"):
        howald_lct(NewtonPolyhedron(((0, 0), (1, 2))))
    with pytest.raises(ValueError):
        newton_contains(NewtonPolyhedron(((1, 0),)), (1, 2, 3))


@st.composite
def polyhedra(draw, max_n=3, max_q=4):
    n = draw(st.integers(1, max_n))
    q = draw(st.integers(1, max_q))
    gens = draw(
        st.lists(st.tuples(*[st.integers(0, 4)] * n).filter(any), min_size=q, max_size=q)
    )
    return NewtonPolyhedron(tuple(gens))


@settings(max_examples=60, deadline=None)
@given(polyhedra(), st.data())
def test_membership_agrees_with_supporting_rays(p, data):
    rays = candidate_rays(p)
    for _ in range(5):
        q = data.draw(st.tuples(*[st.fractions(0, 6, max_denominator=3)] * p.n))
        by_rays = all(dot(v, q) >= min(dot(g, v) for g in p.generators) for v in rays)
        assert newton_contains(p, q) == by_rays


@settings(max_examples=60, deadline=None)
@given(polyhedra(), st.data())
def test_both_forms_agree_and_ignore_order(p, data):
    a = howald_lct_ratio(p)
    b = howald_lct_membership(p)
    assert a == b
    perm = data.draw(st.permutations(range(len(p.generators))))
    shuffled = NewtonPolyhedron(tuple(p.generators[i] for i in perm))
    assert howald_lct(shuffled) == a
    m = min_multiple_inside(p, (1,) * p.n)
    assert newton_contains(p, [m] * p.n)
    if m > 0:
        assert not newton_contains(p, [m * F(99, 100)] * p.n)


def chain(rng, n, length):
    a = [rng.randint(0, 2) for _ in range(n)]
    out = [tuple(a)]
    for _ in range(length - 1):
        a = [x + rng.randint(0, 2) for x in a]
        out.append(tuple(a))
    return out


def lifted_inequalities(alphas, x, y, closed):
    """Membership predicate for the lifted polyhedron of a divisibility chain."""
    for i in range(len(x)):
        for j in range(len(alphas)):
            if x[i] + sum((alphas[j][i] - alphas[k][i]) * y[k] for k in range(j)) < alphas[j][i]:
                return False
    return closed or sum(y) >= 1


@pytest.mark.parametrize("seed", range(12))
def test_lifted_chain_polyhedron(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 2)
    r = rng.randint(1, n)
    closed = rng.random() < 0.5
    alphas = chain(rng, n, r + int(closed))
    gens = [alphas[j] + tuple(int(k == j) for k in range(r)) for j in range(r)]
    if closed:
        gens.append(alphas[r] + (0,) * r)
    p = NewtonPolyhedron(tuple(gens))
    top = max(max(a) for a in alphas) + 1
    xs = [F(k, 2) for k in range(2 * top + 1)]
    ys = [F(k, 2) for k in range(4)]
    for point in itertools.product(*([xs] * n + [ys] * r)):
        assert newton_contains(p, point) == lifted_inequalities(alphas, point[:n], point[n:], closed)


def test_simplex_basics():
    # min x + y  s.t.  x + 2y = 4, x, y >= 0  ->  2 at (0, 2)
    assert simplex.solve([1, 1], [[1, 2]], [4]) == (2, [0, 2])
    assert simplex.solve([0], [[1]], [-1]) is None
    with pytest.raises(simplex.Unbounded):
        simplex.solve([-1, 0], [[1, -1]], [0])
