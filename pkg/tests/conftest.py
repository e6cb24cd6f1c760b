import random
import sys
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from binomial_lct import corpus
from binomial_lct.ideal import GeneralBinomialIdeal, Generator

settings.register_profile("exact", deadline=None, print_blob=True)
settings.load_profile("exact")



def random_ideal(rng: random.Random, max_n=4, max_r=4, max_exp=4, coeffs=(1, -1, 2, -2), monomial_rate=0.2):
    n = rng.randint(1, max_n)
    r = rng.randint(1, max_r)
    gens = []
    while len(gens) < r:
        a = tuple(rng.randint(0, max_exp) for _ in range(n))
        if rng.random() < monomial_rate:
            if any(a):
                gens.append(Generator(a, a, Fraction(0)))
            continue
        b = tuple(rng.randint(0, max_exp) for _ in range(n))
        u = Fraction(rng.choice(coeffs))
        if a == b and u == 1:
            continue
        gens.append(Generator(a, b, u))
    return GeneralBinomialIdeal(n, tuple(gens))


def random_monomial_ideal(rng: random.Random, max_n=4, max_q=5, max_exp=4):
    n = rng.randint(1, max_n)
    q = rng.randint(1, max_q)
    gens = []
    while len(gens) < q:
        a = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(a):
            gens.append(Generator(a, a, Fraction(0)))
    return GeneralBinomialIdeal(n, tuple(gens))


@st.composite
def small_ideals(draw, max_n=3, max_r=3, max_exp=3, coeffs=(1, -1, 2, -2)):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_ideal(random.Random(seed), max_n, max_r, max_exp, coeffs)


@pytest.fixture(scope="session")
def corpus_ideals():
    return {name: corpus.load(name) for name in corpus.names()}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.LINES):
        terminalreporter.write_line(mod.LINES[n])
