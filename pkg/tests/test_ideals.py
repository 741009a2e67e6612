import random
from itertools import combinations, product

import pytest

from bettisplit import (
    DimensionMismatchError,
    Monomial,
    MonomialIdeal,
    borel_closure,
    divides,
    format_ideal,
    format_monomial,
    intersect,
    lcm_lattice,
    membership,
    minimalize,
    monomial_lcm,
    parse_ideal,
    parse_monomial,
    strictly_divides,
)
from conftest import random_squarefree_ideal, random_bounded_ideal


def m(token, n):
    return parse_monomial(token, n)


class TestMonomialBasics:
    def test_lcm_paper_pair(self):
        a = m("x1*x2*x3", 5)
        b = m("x2*x3*x4", 5)
        assert monomial_lcm(a, b) == m("x1*x2*x3*x4", 5)

    def test_lcm_with_unit(self):
        a = m("x2*x5^3", 5)
        assert monomial_lcm(a, Monomial.one(5)) == a

    def test_lcm_componentwise_max(self):
        assert monomial_lcm(m("x1^2*x2", 2), m("x1*x2^3", 2)) == m("x1^2*x2^3", 2)

    def test_lcm_dimension_error(self):
        with pytest.raises(DimensionMismatchError):
            monomial_lcm(Monomial.one(3), Monomial.one(4))

    def test_divides(self):
        big = m("x1*x2*x3*x4*x5", 5)
        assert not strictly_divides(big, big)
        assert divides(big, big)
        assert divides(Monomial.one(5), big)
        assert strictly_divides(m("x1*x2", 3), m("x1*x2*x3", 3))

    def test_divides_dimension_error(self):
        with pytest.raises(DimensionMismatchError):
            divides(Monomial.one(2), Monomial.one(3))

    def test_total_degree_and_unit(self):
        assert m("x1^2*x3", 4).total_degree() == 3
        assert Monomial.one(4).is_unit()
        assert Monomial.one(0).is_unit()

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Monomial((1, -1))


class TestMinimalize:
    def test_drops_multiples(self):
        I = minimalize([m("x1*x2", 4), m("x1*x2*x3", 4)])
        assert I.gens == (m("x1*x2", 4),)

    def test_already_minimal(self):
        gens = [m(t, 5) for t in ("x1*x2*x3", "x1*x3*x5", "x1*x4*x5", "x2*x3*x4", "x2*x4*x5")]
        assert set(minimalize(gens).gens) == set(gens)

    def test_unit_absorbs(self):
        I = minimalize([Monomial.one(3), m("x1", 3)])
        assert I.is_unit()

    def test_idempotent(self):
        rng = random.Random(5)
        for _ in range(20):
            I = random_bounded_ideal(rng, 5, 8)
            again = minimalize(I.gens, n=I.n)
            assert again == I

    def test_empty_needs_dimension(self):
        assert minimalize([], n=4).is_zero()
        with pytest.raises(ValueError):
            minimalize([])


class TestMembershipAndIntersect:
    def test_membership_basic(self):
        I = minimalize([m("x1*x2*x3", 4), m("x2*x4", 4)])
        assert membership(I, m("x1*x2*x3*x4", 4))
        assert not membership(MonomialIdeal(4), m("x1", 4))

    def test_paper_intersection(self):
        J = minimalize([m(t, 5) for t in ("x1*x2*x3", "x1*x3*x5", "x1*x4*x5")])
        K = minimalize([m(t, 5) for t in ("x2*x3*x4", "x2*x4*x5")])
        meet = intersect(J, K)
        assert set(meet.gens) == {m("x1*x2*x3*x4", 5), m("x1*x2*x4*x5", 5)}
        assert membership(meet, m("x1*x2*x4*x5", 5))

    def test_intersect_with_unit(self):
        I = minimalize([m("x1*x2", 3), m("x2*x3", 3)])
        unit = minimalize([Monomial.one(3)])
        assert intersect(I, unit) == I

    def test_intersect_with_zero(self):
        I = minimalize([m("x1", 2)])
        assert intersect(I, MonomialIdeal(2)).is_zero()

    def test_membership_oracle_squarefree(self):
        # brute force: check all 2^6 squarefree monomials in six variables
        rng = random.Random(17)
        for _ in range(10):
            J = random_squarefree_ideal(rng, 6, 5)
            K = random_squarefree_ideal(rng, 6, 5)
            meet = intersect(J, K)
            for bits in product((0, 1), repeat=6):
                probe = Monomial(bits)
                assert membership(meet, probe) == (
                    membership(J, probe) and membership(K, probe)
                )

    def test_membership_oracle_bounded_degree(self):
        rng = random.Random(23)
        for _ in range(6):
            J = random_bounded_ideal(rng, 4, 5)
            K = random_bounded_ideal(rng, 4, 5)
            meet = intersect(J, K)
            for exps in product(range(3), repeat=4):
                probe = Monomial(exps)
                assert membership(meet, probe) == (
                    membership(J, probe) and membership(K, probe)
                )

    def test_commutative_associative(self):
        rng = random.Random(31)
        for _ in range(8):
            A = random_squarefree_ideal(rng, 5, 4)
            B = random_squarefree_ideal(rng, 5, 4)
            C = random_squarefree_ideal(rng, 5, 4)
            assert intersect(A, B) == intersect(B, A)
            assert intersect(intersect(A, B), C) == intersect(A, intersect(B, C))


class TestLcmLattice:
    def test_two_variables(self):
        L = lcm_lattice(minimalize([m("x1", 2), m("x2", 2)]))
        assert set(L) == {m("x1", 2), m("x2", 2), m("x1*x2", 2)}

    def test_top_element(self):
        gens = [m(t, 5) for t in ("x1*x2*x3", "x1*x3*x5", "x1*x4*x5", "x2*x3*x4", "x2*x4*x5")]
        L = lcm_lattice(minimalize(gens))
        assert m("x1*x2*x3*x4*x5", 5) in L

    def test_zero_ideal_empty(self):
        assert len(lcm_lattice(MonomialIdeal(3))) == 0

    def test_matches_subset_enumeration(self):
        rng = random.Random(41)
        for _ in range(12):
            I = random_squarefree_ideal(rng, 6, 6)
            expected = set()
            gens = list(I.gens)
            for r in range(1, len(gens) + 1):
                for S in combinations(gens, r):
                    l = S[0]
                    for g in S[1:]:
                        l = monomial_lcm(l, g)
                    expected.add(l)
            assert set(lcm_lattice(I)) == expected

    def test_lcm_closed_and_contains_generators(self):
        rng = random.Random(43)
        I = random_bounded_ideal(rng, 5, 6)
        L = set(lcm_lattice(I))
        assert set(I.gens) <= L
        for a in L:
            for b in L:
                assert monomial_lcm(a, b) in L


class TestBorelClosure:
    def test_already_closed(self):
        assert borel_closure([m("x1^2", 3)]).gens == (m("x1^2", 3),)

    def test_single_exchange(self):
        assert set(borel_closure([m("x2", 2)]).gens) == {m("x1", 2), m("x2", 2)}

    def test_exchange_closed_invariant(self):
        B = borel_closure([m("x1*x6^3", 6), m("x3^2*x6", 6)])
        for g in B.gens:
            for j in range(6):
                if g.exps[j] == 0:
                    continue
                for i in range(j):
                    e = list(g.exps)
                    e[j] -= 1
                    e[i] += 1
                    assert membership(B, Monomial(e))

    def test_empty_seeds_rejected(self):
        with pytest.raises(ValueError):
            borel_closure([])


class TestTextFormat:
    def test_roundtrip_idempotent(self):
        text = "# comment\nvars 6\n\nx1*x3^2*x6\nx2\n"
        once = format_ideal(parse_ideal(text))
        assert format_ideal(parse_ideal(once)) == once

    def test_unit_and_zero(self):
        unit = parse_ideal("vars 3\n1\n")
        assert unit.is_unit()
        zero = parse_ideal("vars 3\n")
        assert zero.is_zero()
        assert parse_ideal(format_ideal(zero)) == zero

    def test_rejects_bad_tokens(self):
        from bettisplit import IdealFormatError

        with pytest.raises(IdealFormatError):
            parse_ideal("vars 2\ny1\n")
        with pytest.raises(IdealFormatError):
            parse_ideal("vars 2\nx3\n")
        with pytest.raises(IdealFormatError):
            parse_ideal("x1*x2\n")

    def test_format_monomial(self):
        assert format_monomial(m("x1*x3^2*x6", 6)) == "x1*x3^2*x6"
        assert format_monomial(Monomial.one(6)) == "1"
