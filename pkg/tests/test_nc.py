import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loepage.nc import (
    catalan,
    catalan_continued,
    enumerate_nc,
    enumerate_nc_pairings,
    geodesic_set,
    geodesic_set_bruteforce,
    is_noncrossing,
    log_catalan_derivative,
    mobius,
)
from loepage.perm import (
    all_perms,
    cayley_distance,
    compose,
    from_cycles,
    full_cycle,
    identity,
    parse_cycles,
    staggered_pairings,
)

CATALANS = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


class TestCatalan:
    def test_values(self):
        assert [catalan(k) for k in range(9)] == CATALANS

    def test_continued_matches_integers(self):
        for k in range(9):
            assert catalan_continued(float(k)) == pytest.approx(catalan(k), rel=1e-12)

    def test_log_derivative_at_one(self):
        # d/dx log C_x at x=1 is 1/2: this is the k->1 entropy limit constant
        assert log_catalan_derivative(1.0) == pytest.approx(0.5, abs=1e-12)

    def test_log_derivative_is_derivative(self):
        h = 1e-6
        for x in (1.0, 2.5, 4.0):
            fd = (math.log(catalan_continued(x + h)) - math.log(catalan_continued(x - h))) / (2 * h)
            assert log_catalan_derivative(x) == pytest.approx(fd, rel=1e-5)


class TestEnumeration:
    def test_counts(self):
        for k in range(1, 9):
            assert len(enumerate_nc(k)) == catalan(k)

    def test_distance_criterion(self):
        # NC(k) = permutations on the geodesic from e to the full cycle
        for k in range(1, 6):
            gamma = full_cycle(k)
            e = identity(k)
            expected = {
                p
                for p in all_perms(k)
                if cayley_distance(e, p) + cayley_distance(p, gamma)
                == cayley_distance(e, gamma)
            }
            assert set(enumerate_nc(k)) == expected

    def test_is_noncrossing_agrees(self):
        for k in range(1, 6):
            nc = set(enumerate_nc(k))
            for p in all_perms(k):
                assert is_noncrossing(p) == (p in nc)

    def test_pairing_counts(self):
        for k in range(1, 7):
            assert len(enumerate_nc_pairings(2 * k)) == catalan(k)

    def test_pairings_are_geodesic(self):
        from loepage.perm import BrauerPairing, brauer_distance

        k = 3
        tau_e, tau_g = staggered_pairings(k)
        te, tg = BrauerPairing.from_perm(tau_e), BrauerPairing.from_perm(tau_g)
        full = brauer_distance(te, tg)
        for s in enumerate_nc_pairings(2 * k):
            assert brauer_distance(tg, s) + brauer_distance(s, te) == full


class TestMobius:
    def test_values_small(self):
        e, g = identity(2), full_cycle(2)
        assert mobius(e, e) == 1
        assert mobius(e, g) == -1
        assert mobius(g, g) == 1

    def test_product_formula(self):
        # mu factorizes over the cycles of a^-1 b as (-1)^(l-1) C_{l-1}
        a = identity(4)
        b = full_cycle(4)
        assert mobius(a, b) == -catalan(3)  # single 4-cycle: (-1)^3 C_3

    def test_symmetry(self):
        for k in range(1, 5):
            g = full_cycle(k)
            for s in enumerate_nc(k):
                assert mobius(s, g) == mobius(g, s)


class TestGeodesicSet:
    def test_identity(self):
        assert set(geodesic_set(identity(3))) == {identity(3)}

    def test_k4_pairing(self):
        # the 4-point boundary pairing has exactly four geodesic predecessors
        tau_g = parse_cycles("(14)(23)")
        expected = {
            identity(4),
            parse_cycles("(23)", 4),
            parse_cycles("(14)", 4),
            tau_g,
        }
        assert set(geodesic_set(tau_g)) == expected

    def test_full_cycle_is_nc(self):
        for k in range(1, 6):
            assert set(geodesic_set(full_cycle(k))) == set(enumerate_nc(k))

    def test_matches_bruteforce(self):
        for sigma in [
            parse_cycles("(14)(23)"),
            parse_cycles("(12)(34)"),
            parse_cycles("(123)(45)"),
            full_cycle(4),
            from_cycles([(0, 2)], 4),
        ]:
            assert set(geodesic_set(sigma)) == geodesic_set_bruteforce(sigma)

    def test_boundary_geodesics_intersect_at_identity(self):
        # k = 1 is excluded: there tau_e = tau_gamma and the sets coincide
        for k in range(2, 6):
            tau_e, tau_g = staggered_pairings(k)
            inter = set(geodesic_set(tau_e)) & set(geodesic_set(tau_g))
            assert inter == {identity(2 * k)}

    @settings(max_examples=25, deadline=None)
    @given(st.permutations(list(range(5))))
    def test_members_lie_on_geodesic(self, word):
        from loepage.perm import Perm

        sigma = Perm(word)
        e = identity(5)
        d = cayley_distance(e, sigma)
        for p in geodesic_set(sigma):
            assert cayley_distance(e, p) + cayley_distance(p, sigma) == d
