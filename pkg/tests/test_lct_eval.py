import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from binomial_lct import corpus
from binomial_lct.ideal import GeneralBinomialIdeal, Generator
from binomial_lct.lct_eval import LctFunction, evaluate, evaluate_star
from binomial_lct.linalg import INF

from conftest import small_ideals


def directions(n):
    return st.lists(st.integers(0, 6), min_size=n, max_size=n).filter(any)


def test_curve345_point():
    b = evaluate(corpus.load("curve345").triple(), (4, 5, 6))
    assert b.alpha == (10, 11, 12)
    assert b.beta == (0, -1, -1)
    assert b.value == F(16, 11)
    assert b.star == F(3, 2)
    assert b.r0 == 4 and b.tilde_s == 2


def test_curve378_point():
    b = evaluate(corpus.load("curve378").triple(), (3, 7, 8))
    assert (b.value, b.star) == (F(19, 15), F(9, 7))


def test_untwisted_point_breakdown():
    b = evaluate(corpus.load("curve6_8_10_11").triple(), (6, 8, 10, 11))
    assert b.candidates == (3, F(35, 16), F(37, 18), F(45, 22))
    assert b.value == F(45, 22)
    assert b.n_seq == (1, 2, 4) and b.s_v == 4


def test_twisted_point_breakdown():
    b = evaluate(corpus.load("curve6_8_10_11_twisted").triple(), (6, 8, 10, 11))
    assert b.tilde_s is INF
    assert b.candidates == (INF, F(35, 16), F(37, 18), F(41, 20))
    assert b.value == F(41, 20)
    assert b.r0 == 3


def test_coefficient_example_breakdowns():
    v = (4, 5, 6, 0, 0)
    b1 = evaluate(corpus.load("coef_a1").triple(), v)
    assert b1.epsilon == (1, 3, 2, 4)
    assert b1.s_rank == 2 and b1.n_seq == (1, 3)
    assert b1.candidates == (2, F(15, 10), F(17, 12))
    b2 = evaluate(corpus.load("coef_a2").triple(), v)
    assert b2.r0 == 2 and b2.n_seq == (1,)
    assert b2.candidates == (INF, F(15, 10), F(15, 10))


def test_unit_first_generator():
    # a monomial listed first makes r0 = 1 and leaves |v| / alpha as the only fraction
    ideal = GeneralBinomialIdeal(2, (Generator((1, 0), (1, 0), F(0)), Generator((2, 0), (0, 1), F(1))))
    b = evaluate(ideal.triple(), (1, 1))
    assert b.r0 == 1 and b.n_seq == () and b.s0 == 0
    assert b.candidates == (INF, F(2, 1))
    assert b.value == 2


def test_epsilon_override_must_sort_alpha():
    f = LctFunction(corpus.load("coef_a1").triple())
    v = (4, 5, 6, 0, 0)
    assert f.evaluate(v, (3, 1, 4, 2)).value == f.value(v)
    with pytest.raises(ValueError, match="does not sort"):
        f.evaluate(v, (2, 1, 3, 4))
    with pytest.raises(ValueError, match="permutation"):
        f.evaluate(v, (1, 1, 2, 3))


@pytest.mark.parametrize("v, msg", [((0, 0, 0), "nonzero"), ((1, -1, 2), "nonnegative"), ((1, 2), "length")])
def test_bad_directions(v, msg):
    with pytest.raises(ValueError, match=msg):
        evaluate(corpus.load("curve345").triple(), v)


@settings(max_examples=150, deadline=None)
@given(small_ideals(), st.data())
def test_scaling_invariance(ideal, data):
    f = LctFunction(ideal.triple())
    v = data.draw(directions(ideal.n))
    base = f.evaluate(v)
    for lam in (2, 3, 7):
        scaled = f.evaluate([lam * x for x in v])
        assert scaled.value == base.value
        assert scaled.star == base.star


@settings(max_examples=150, deadline=None)
@given(small_ideals(), st.data())
def test_value_at_most_star(ideal, data):
    t = ideal.triple()
    v = data.draw(directions(ideal.n))
    b = evaluate(t, v)
    assert b.value <= b.star
    assert b.star == evaluate_star(t, v)
    assert b.value == min(b.candidates)


@settings(max_examples=150, deadline=None)
@given(small_ideals(), st.data())
def test_generator_order_does_not_matter(ideal, data):
    v = data.draw(directions(ideal.n))
    perm = data.draw(st.permutations(range(len(ideal.generators))))
    other = GeneralBinomialIdeal(ideal.n, tuple(ideal.generators[p] for p in perm))
    assert evaluate(other.triple(), v).value == evaluate(ideal.triple(), v).value


@settings(max_examples=150, deadline=None)
@given(small_ideals(), st.data())
def test_variable_relabelling(ideal, data):
    v = data.draw(directions(ideal.n))
    perm = data.draw(st.permutations(range(ideal.n)))

    def move(e):
        return tuple(e[p] for p in perm)

    other = GeneralBinomialIdeal(ideal.n, tuple(Generator(move(g.a), move(g.b), g.u) for g in ideal.generators))
    a = evaluate(ideal.triple(), v)
    b = evaluate(other.triple(), move(v))
    assert (a.value, a.star, a.alpha, a.beta) == (b.value, b.star, b.alpha, b.beta)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_monomial_ideals_value_equals_star(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    gens = []
    while len(gens) < rng.randint(1, 5):
        a = tuple(rng.randint(0, 4) for _ in range(n))
        if any(a):
            gens.append(Generator(a, a, F(0)))
    t = GeneralBinomialIdeal(n, tuple(gens)).triple()
    v = tuple(rng.randint(0, 5) for _ in range(n))
    assume(any(v))
    b = evaluate(t, v)
    assert b.value == b.star
    assert b.r0 == 1
