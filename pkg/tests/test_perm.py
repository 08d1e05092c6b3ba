import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loepage.perm import (
    BrauerPairing,
    Perm,
    all_pairings,
    all_perms,
    brauer_distance,
    brauer_loop_count,
    cayley_distance,
    compose,
    conjugacy_representative,
    from_cycles,
    full_cycle,
    identity,
    parse_cycles,
    second_moment_pairing,
    staggered_pairings,
    to_cycle_string,
    word_cycle_type,
)

perms = st.integers(2, 6).flatmap(
    lambda n: st.permutations(list(range(n))).map(Perm)
)


def pairs_same_n(draw):
    n = draw(st.integers(2, 6))
    a = Perm(draw(st.permutations(list(range(n)))))
    b = Perm(draw(st.permutations(list(range(n)))))
    return a, b


perm_pairs = st.composite(pairs_same_n)()


class TestBasics:
    def test_identity(self):
        e = identity(4)
        assert e.is_identity()
        assert e.cycle_type() == (1, 1, 1, 1)
        assert e.cycle_count() == 4

    def test_full_cycle(self):
        g = full_cycle(4)
        assert [g(i) for i in range(4)] == [1, 2, 3, 0]
        assert g.cycle_type() == (4,)

    def test_compose_convention(self):
        # (a o b)(x) = a(b(x)): a = (12), b = (23) in 1-indexed cycles
        a = from_cycles([(0, 1)], 3)
        b = from_cycles([(1, 2)], 3)
        c = compose(a, b)
        assert c.word == (1, 2, 0)  # the 3-cycle (123)

    def test_mul_is_compose(self):
        a = from_cycles([(0, 2)], 4)
        b = from_cycles([(1, 3)], 4)
        assert a * b == compose(a, b)

    def test_inverse(self):
        p = Perm((2, 0, 1))
        assert compose(p, p.inverse()).is_identity()

    def test_cycle_type_sorted_desc(self):
        p = from_cycles([(0, 1), (2, 3, 4)], 6)
        assert p.cycle_type() == (3, 2, 1)

    def test_word_cycle_type_matches(self):
        for p in all_perms(5):
            assert word_cycle_type(p.word) == p.cycle_type()

    def test_conjugacy_representative(self):
        for ct in [(3, 2, 1), (4,), (2, 2)]:
            assert conjugacy_representative(ct).cycle_type() == ct


class TestCycleNotation:
    def test_parse_roundtrip(self):
        p = from_cycles([(0, 3), (1, 2)], 4)
        assert parse_cycles(to_cycle_string(p)) == p

    def test_parse_forms(self):
        assert parse_cycles("(12)(34)") == parse_cycles("(1 2)(3 4)")
        assert parse_cycles("(1,2)(3,4)", 5).n == 5

    def test_bad_input(self):
        with pytest.raises(ValueError):
            parse_cycles("(11)")


class TestCayley:
    def test_distance_examples(self):
        n = 4
        assert cayley_distance(identity(n), full_cycle(n)) == n - 1
        t = from_cycles([(0, 1)], n)
        assert cayley_distance(identity(n), t) == 1

    @settings(max_examples=60)
    @given(perm_pairs)
    def test_metric_axioms(self, ab):
        a, b = ab
        d = cayley_distance(a, b)
        assert d >= 0
        assert (d == 0) == (a == b)
        assert d == cayley_distance(b, a)

    @settings(max_examples=40)
    @given(perm_pairs, perms)
    def test_triangle(self, ab, c):
        a, b = ab
        if c.n != a.n:
            c = identity(a.n)
        assert cayley_distance(a, b) <= cayley_distance(a, c) + cayley_distance(c, b)

    @settings(max_examples=40)
    @given(perm_pairs)
    def test_left_invariance(self, ab):
        a, b = ab
        g = full_cycle(a.n)
        assert cayley_distance(compose(g, a), compose(g, b)) == cayley_distance(a, b)


class TestStaggeredPairings:
    def test_k2(self):
        tau_e, tau_g = staggered_pairings(2)
        assert tau_e == parse_cycles("(12)(34)")
        assert tau_g == parse_cycles("(14)(23)")

    def test_structure(self):
        for k in (1, 2, 3, 4):
            tau_e, tau_g = staggered_pairings(k)
            for t in (tau_e, tau_g):
                assert t.cycle_type() == (2,) * k
                assert compose(t, t).is_identity()
            # tau_g tau_e is the square of a full cycle: k-cycle pair structure
            prod = compose(tau_g, tau_e)
            assert cayley_distance(identity(2 * k), prod) == 2 * (k - 1)

    def test_second_moment_pairing(self):
        p = second_moment_pairing(2)
        assert p.n == 8
        assert p.cycle_type() == (2, 2, 2, 2)
        # two stacked copies of tau_gamma on {1..4} and {5..8}
        assert p == parse_cycles("(14)(23)(58)(67)")


class TestBrauer:
    def test_loop_count_self(self):
        m = BrauerPairing([(0, 1), (2, 3)])
        assert brauer_loop_count(m, m) == 2
        assert brauer_distance(m, m) == 0

    def test_distance_is_half_cayley(self):
        # odd-even pairings correspond to permutations; Brauer distance
        # equals half the Cayley distance of the corresponding involutions
        for a in all_pairings(6):
            for b in all_pairings(6):
                d = brauer_distance(a, b)
                dc = cayley_distance(a.to_perm(), b.to_perm())
                assert 2 * d == dc

    def test_pairing_count(self):
        assert sum(1 for _ in all_pairings(6)) == 15
        assert sum(1 for _ in all_pairings(8)) == 105

    def test_perm_roundtrip(self):
        for m in all_pairings(6):
            assert BrauerPairing.from_perm(m.to_perm()) == m
