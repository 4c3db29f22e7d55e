import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import perm
from psolv.catalog import alternating, cyclic, symmetric
from psolv.config import LIMITS
from psolv.errors import CapacityError, ContractViolation, InputError
from psolv.perm import (
    Permutation,
    PermGroup,
    closure_elements,
    format_group_text,
    group_from_generators,
    is_normal,
    parse_group_text,
    quotient_group,
)


def permutations(degree):
    return st.permutations(list(range(degree))).map(Permutation)


@st.composite
def small_groups(draw, max_degree=6, max_gens=3):
    n = draw(st.integers(1, max_degree))
    gens = draw(st.lists(permutations(n), max_size=max_gens))
    return PermGroup(gens, n)


class TestPermutation:
    @given(st.integers(1, 9).flatmap(lambda n: permutations(n)))
    def test_inverse(self, a):
        assert (a * a.inverse()).is_identity()
        assert (a.inverse() * a) == Permutation.identity(a.degree)

    @given(st.integers(1, 7).flatmap(lambda n: st.tuples(permutations(n), permutations(n), permutations(n))))
    def test_associative(self, abc):
        a, b, c = abc
        assert (a * b) * c == a * (b * c)

    @given(st.integers(1, 8).flatmap(lambda n: st.tuples(permutations(n), permutations(n))))
    def test_conjugate_matches_product(self, ab):
        a, x = ab
        assert a.conjugate(x) == x.inverse() * a * x

    @given(st.integers(1, 8).flatmap(permutations))
    def test_order_and_power(self, a):
        assert (a ** a.order()).is_identity()
        assert a ** -1 == a.inverse()

    def test_product_acts_left_to_right(self):
        a = perm([(1, 2)], 3)
        b = perm([(2, 3)], 3)
        # 1 -> 2 under a, then 2 -> 3 under b
        assert (a * b)(0) == 2

    def test_not_a_bijection(self):
        with pytest.raises(InputError):
            Permutation([0, 0, 1])

    def test_cycle_round_trip(self):
        g = perm([(1, 3, 2), (4, 5)], 6)
        assert g.cycle_string() == "(1 3 2)(4 5)"
        assert Permutation.parse(g.cycle_string(), 6) == g
        assert Permutation.parse("()", 3).is_identity()

    @pytest.mark.parametrize("bad", ["(1 2", "1 2)", "(1 2)(2 3)", "(1 9)", "(a b)"])
    def test_parse_errors(self, bad):
        with pytest.raises(InputError):
            Permutation.parse(bad, 4)


class TestGroupFromGenerators:
    def test_s4(self):
        G = group_from_generators([perm([(1, 2)], 4), perm([(1, 2, 3, 4)], 4)], 4)
        assert G.order == 24

    def test_empty_is_trivial(self):
        G = group_from_generators([], 5)
        assert G.order == 1
        assert G.elements() == [Permutation.identity(5)]

    def test_a5(self):
        gens = [perm([(1, 2, 3, 4, 5)], 5), perm([(1, 2, 3)], 5)]
        G = group_from_generators(gens, 5)
        assert G.order == 60
        assert len(closure_elements(gens, 5)) == 60

    def test_degree_mismatch(self):
        with pytest.raises(InputError):
            group_from_generators([perm([(1, 2)], 3), perm([(1, 2)], 4)], 4)

    def test_large_order_is_exact(self):
        n = 22
        assert symmetric(n).order == math.factorial(n)  # > 10^18


class TestMembership:
    def test_identity_in_any(self, A4):
        assert Permutation.identity(4) in A4

    def test_transposition_not_in_a4(self, A4):
        assert not A4.contains(perm([(1, 2)], 4))

    def test_generator_member(self):
        G = PermGroup([perm([(1, 2, 3)], 4), perm([(1, 2), (3, 4)], 4)], 4)
        assert G.contains(perm([(1, 2), (3, 4)], 4))

    def test_degree_mismatch(self, A4):
        with pytest.raises(InputError):
            A4.contains(Permutation.identity(5))


class TestElements:
    def test_c3(self):
        assert len(cyclic(3).elements()) == 3

    def test_s4_distinct_and_members(self, S4):
        els = S4.elements()
        assert len(set(els)) == 24
        assert all(S4.contains(g) for g in els)

    def test_cap(self, monkeypatch):
        monkeypatch.setattr(LIMITS, "enumeration_cap", 100)
        G = symmetric(5)
        with pytest.raises(CapacityError, match="100"):
            G.elements()


@given(small_groups())
def test_chain_order_matches_closure(G):
    elems = closure_elements(G.generators, G.degree)
    assert G.order == len(elems)
    assert set(G.elements()) == elems
    assert G.order == math.prod(G.chain.orbit_sizes())
    assert all(G.contains(g) for g in G.generators)


@given(small_groups(max_degree=5), st.data())
def test_contains_agrees_with_enumeration(G, data):
    g = data.draw(permutations(G.degree))
    assert G.contains(g) == (g in closure_elements(G.generators, G.degree))


def test_chain_is_deterministic():
    a = PermGroup([perm([(1, 2)], 6), perm([(1, 2, 3, 4, 5, 6)], 6)], 6)
    b = PermGroup([perm([(1, 2)], 6), perm([(1, 2, 3, 4, 5, 6)], 6)], 6)
    assert a.chain.base == b.chain.base
    assert a.chain.base[0] == 0
    assert [g.images for g in a.chain.strong_generators] == [g.images for g in b.chain.strong_generators]


class TestNormality:
    def test_a4_in_s4(self, S4, A4):
        assert is_normal(S4, A4)

    def test_transposition_subgroup(self, S4):
        assert not is_normal(S4, PermGroup([perm([(1, 2)], 4)], 4))

    def test_v4(self, S4, V4):
        assert V4.order == 4 and is_normal(S4, V4)

    def test_not_subgroup(self, A4):
        with pytest.raises(ContractViolation):
            is_normal(A4, PermGroup([perm([(1, 2)], 4)], 4))


class TestQuotient:
    def test_s4_mod_a4(self, S4, A4):
        Q, _ = quotient_group(S4, A4)
        assert Q.order == 2

    def test_g_mod_g(self, S4):
        Q, _ = quotient_group(S4, S4)
        assert Q.order == 1

    def test_s4_mod_v4(self, S4, V4):
        Q, epi = quotient_group(S4, V4)
        assert (Q.order, Q.degree) == (6, 6)
        kernel = [g for g in S4.elements() if epi(g).is_identity()]
        assert set(kernel) == V4.element_set()
        els = S4.elements()
        for a, b in zip(els, reversed(els)):
            assert epi(a * b) == epi(a) * epi(b)

    def test_not_normal(self, S4):
        with pytest.raises(ContractViolation):
            quotient_group(S4, PermGroup([perm([(1, 2)], 4)], 4))

    def test_index_cap(self, S4, monkeypatch):
        monkeypatch.setattr(LIMITS, "quotient_degree_cap", 5)
        with pytest.raises(CapacityError):
            quotient_group(S4, PermGroup([], 4))

    def test_orders_multiply(self):
        G = alternating(5)
        for N in (G, PermGroup([], 5)):
            Q, _ = quotient_group(G, N)
            assert Q.order * N.order == G.order


class TestGroupText:
    def test_parse(self):
        G = parse_group_text("# S4\ndegree 4\n\ngen (1 2)\ngen (1 2 3 4)  # a 4-cycle\n")
        assert G.order == 24

    def test_no_generators(self):
        assert parse_group_text("degree 3\n").order == 1

    def test_malformed_cycle_reports_line(self):
        with pytest.raises(InputError, match="line 3"):
            parse_group_text("degree 4\ngen (1 2)\ngen (1 2\n")

    @pytest.mark.parametrize(
        "text",
        ["gen (1 2)\n", "degree 0\n", "degree x\n", "degree 3\ngen (1 4)\n", "degree 3\nfoo\n", ""],
    )
    def test_errors(self, text):
        with pytest.raises(InputError):
            parse_group_text(text)

    def test_round_trip(self, S4):
        G = parse_group_text(format_group_text(S4, comment="S4"))
        assert G == S4
