import random
from importlib import resources
from itertools import combinations

import pytest

from bettisplit import Monomial, MonomialIdeal, parse_ideal


def fixture_ideal(name):
    text = (resources.files("bettisplit") / "data" / name).read_text()
    return parse_ideal(text)


def _support_monomial(n, supp):
    return Monomial(tuple(1 if i in supp else 0 for i in range(n)))


def random_squarefree_ideal(rng, n, max_gens, max_deg=None):
    """Nonzero squarefree ideal with at least two minimal generators.

    Half the time the generators are distinct monomials of one degree (an
    antichain), so minimal generator counts actually reach max_gens instead
    of collapsing under divisibility.
    """
    max_deg = max_deg or min(n, 4)
    while True:
        k = rng.randint(2, max_gens)
        if rng.random() < 0.5:
            d = rng.randint(2, max_deg)
            pool = list(combinations(range(n), d))
            picks = rng.sample(pool, min(k, len(pool)))
            gens = [_support_monomial(n, set(p)) for p in picks]
        else:
            gens = [
                _support_monomial(n, set(rng.sample(range(n), rng.randint(2, max_deg))))
                for _ in range(k)
            ]
        I = MonomialIdeal(n, gens)
        if len(I.gens) >= 2:
            return I


def random_bounded_ideal(rng, n, max_gens, max_exp=2):
    """Nonzero ideal with small exponents, not necessarily squarefree."""
    while True:
        k = rng.randint(2, max_gens)
        gens = []
        for _ in range(k):
            exps = [0] * n
            for pos in rng.sample(range(n), rng.randint(1, min(n, 3))):
                exps[pos] = rng.randint(1, max_exp)
            if any(exps):
                gens.append(Monomial(tuple(exps)))
        I = MonomialIdeal(n, gens)
        if len(I.gens) >= 2 and not I.is_unit():
            return I


@pytest.fixture(scope="session")
def ideal_family():
    """220 seeded random ideals: n <= 7, at most 10 generators each.

    160 squarefree plus 60 with exponents up to 2; shared by the random
    property sweeps so Betti tables computed once are reused.
    """
    rng = random.Random(20260810)
    family = []
    for _ in range(160):
        n = rng.randint(3, 7)
        family.append(random_squarefree_ideal(rng, n, max_gens=10))
    for _ in range(60):
        n = rng.randint(3, 5)
        family.append(random_bounded_ideal(rng, n, max_gens=7))
    return family


@pytest.fixture(scope="session")
def rp2():
    return fixture_ideal("rp2.ideal")


@pytest.fixture(scope="session")
def ek_example():
    return fixture_ideal("ek_absent.ideal")


@pytest.fixture(scope="session")
def char_dependent_7():
    return fixture_ideal("char_dependent_7.ideal")


@pytest.fixture(scope="session")
def char_independent_7():
    return fixture_ideal("char_independent_7.ideal")


@pytest.fixture(scope="session")
def borel_seeds():
    return fixture_ideal("borel_seeds.ideal")
