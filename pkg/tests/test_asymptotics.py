import math
from fractions import Fraction

import pytest

from loepage.asymptotics import (
    entropy_curve,
    haar_ose_correction,
    half_chain_f,
    half_chain_purity_corrected,
    page_purity,
    purity_leading_general,
    renyi_page_entropy,
    vn_page_entropy,
)
from loepage.exact import PurityQuery, average_purity_exact
from loepage.moments import (
    cumulants_from_moments,
    finite_trace_profile,
    traceless_profile,
)
from loepage.nc import catalan

F = Fraction


class TestPagePurity:
    def test_half_chain_is_catalan(self):
        # dimA = dimB = sqrt(D): every NC element is geodesic, so the sum
        # collapses to C_k D^-(k-1) exactly
        for k in range(1, 7):
            for s in (4, 16):
                assert page_purity(k, s, s) == pytest.approx(
                    catalan(k) / float(s * s) ** (k - 1), rel=1e-12
                )

    def test_k1_and_trivial_cut(self):
        assert page_purity(1, 8, 32) == 1.0
        assert page_purity(3, 1, 64) == 1.0
        assert page_purity(3, 64, 1) == 1.0

    def test_swap_symmetry(self):
        for k in range(1, 9):
            assert page_purity(k, 4, 64) == pytest.approx(page_purity(k, 64, 4), rel=1e-12)

    def test_small_subsystem_limit(self):
        # dimA >> dimB: purity -> dimB^-(2k-2), ratio -> 1 within 1/dimA^2
        k = 3
        dimB = 4
        for dimA in (2**8, 2**10):
            ratio = page_purity(k, dimA, dimB) / dimB ** (-(2 * k - 2))
            assert abs(ratio - 1) < 4.0 / dimA**2 * dimB**2


class TestLeadingGeneral:
    def test_k2_traceless(self):
        cum = cumulants_from_moments(traceless_profile(4, F(0)))
        for dA, dB in ((8, 32), (16, 16)):
            val = purity_leading_general(2, dA, dB, cum)
            lead = dA**-2 + dB**-2
            assert abs(val - lead) <= 2.0 / (dA * dB) ** 2 * max(dA, dB) ** 2

    def test_finite_trace_large_d(self):
        # kappa1 != 0: the identity permutation dominates, value -> kappa1^(2k)
        w = 0.5
        cum = cumulants_from_moments(finite_trace_profile(4, F(1, 2)))
        for s in (64, 256):
            val = purity_leading_general(2, s, s, cum)
            assert val == pytest.approx(w**4, abs=20 / s**2)

    def test_agrees_with_exact_engine(self):
        prof = traceless_profile(8, F(-1))
        cum = cumulants_from_moments(prof)
        for k in (2, 3):
            s = 16
            exact = float(average_purity_exact(PurityQuery(k, s, s, prof)).value)
            lead = purity_leading_general(k, s, s, cum)
            # they differ only by multiplicative 1/D^2 Weingarten corrections
            assert abs(lead / exact - 1) < 20.0 / (s * s)

    def test_k_guard(self):
        cum = cumulants_from_moments(traceless_profile(10, F(0)))
        with pytest.raises(ValueError):
            purity_leading_general(6, 8, 8, cum)
        with pytest.raises(ValueError):
            # profile shorter than 2k
            purity_leading_general(4, 8, 8, cumulants_from_moments(traceless_profile(4, F(0))))


class TestHalfChainCorrections:
    def test_f_values(self):
        assert half_chain_f(2, F(0)) == 1
        assert half_chain_f(2, F(-1)) == -1
        assert half_chain_f(3, F(1, 2)) == 12
        assert half_chain_f(4, F(0)) == 29

    def test_f_unavailable(self):
        with pytest.raises(ValueError):
            half_chain_f(5, F(0))

    def test_corrected_purity_values(self):
        assert half_chain_purity_corrected(2, 256, -1) == pytest.approx(
            2 / 256 - 1 / 65536, rel=1e-14
        )
        D = 4096
        assert half_chain_purity_corrected(4, D, 0) == pytest.approx(
            14 / D**3 + 29 / D**4, rel=1e-14
        )

    def test_matches_exact_engine_to_next_order(self):
        for k4 in (F(0), F(-1), F(1, 2)):
            prof = traceless_profile(8, k4)
            for k in (2, 3, 4):
                errs = []
                for s in (4, 8, 16):
                    D = s * s
                    ex = float(average_purity_exact(PurityQuery(k, s, s, prof)).value)
                    co = half_chain_purity_corrected(k, D, k4)
                    errs.append(abs(ex - co) * D ** (k + 1))
                # residual is O(D^-(k+1)): scaled residuals stay bounded
                assert max(errs) < 600


class TestEntropies:
    def test_vn_half_chain(self):
        assert vn_page_entropy(16, 16) == pytest.approx(8 * math.log(2) - 0.5, abs=1e-12)

    def test_vn_trivial(self):
        assert vn_page_entropy(1, 256) == 0.0

    def test_vn_asymmetric(self):
        d = vn_page_entropy(4, 64)
        assert d == pytest.approx(2 * math.log(4) - 16 / (2 * 64**2), abs=1e-12)

    def test_renyi_k1_routes_to_vn(self):
        assert renyi_page_entropy(1, 16, 16) == vn_page_entropy(16, 16)

    def test_renyi_half_chain_leading(self):
        # k=2 at the half chain: ln D - ln 2 at leading order
        D = 2**16
        s = 2**8
        val = renyi_page_entropy(2, s, s)
        assert val == pytest.approx(math.log(D) - math.log(2), abs=1e-3)

    def test_renyi_monotone_in_k(self):
        for dA, dB in ((16, 16), (8, 64)):
            vals = [renyi_page_entropy(k, dA, dB) for k in (2, 3, 4)]
            assert vals[0] >= vals[1] >= vals[2]

    def test_curve_shape(self):
        pts = entropy_curve("vn", 8)
        ents = [p.entropy for p in pts]
        assert ents == ents[::-1]  # symmetric about the half chain
        assert all(ents[i] <= ents[i + 1] + 1e-12 for i in range(4))  # rising to nA=4
        for p in pts:
            cap = 2 * min(p.nA, 8 - p.nA) * math.log(2)
            assert p.entropy <= cap + 1e-9

    def test_curve_orders(self):
        pts = entropy_curve(2, 6, kappa4=-1.0)
        assert len(pts) == 7
        assert all(p.order == 2 for p in pts)


class TestOseConstant:
    def test_values(self):
        assert haar_ose_correction(2) == pytest.approx(-math.log(3), abs=1e-14)
        assert haar_ose_correction(3) == pytest.approx(-math.log(15) / 2, abs=1e-14)

    def test_dominates_catalan_correction(self):
        # (2k-1)!! >= C_k: pairings outnumber non-crossing pairings
        for k in range(2, 7):
            assert abs(haar_ose_correction(k)) >= abs(math.log(catalan(k)) / (1 - k))

    def test_guard(self):
        with pytest.raises(ValueError):
            haar_ose_correction(1)
