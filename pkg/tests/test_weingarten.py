from fractions import Fraction

import pytest

from loepage.classalg import class_size, partitions
from loepage.perm import all_perms, compose, conjugacy_representative, identity
from loepage.weingarten import (
    content_product,
    gram_entry,
    irrep_dimension,
    sn_character,
    weingarten_asymptotic,
    weingarten_exact,
)


class TestCharacters:
    def test_s3_table(self):
        # rows: lambda = (3), (2,1), (1,1,1); columns mu = (1,1,1), (2,1), (3)
        table = {
            (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
            (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
            (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
        }
        for lam, row in table.items():
            for mu, val in row.items():
                assert sn_character(lam, mu) == val

    def test_dimension_consistency(self):
        for n in range(1, 7):
            for lam in partitions(n):
                assert sn_character(lam, (1,) * n) == irrep_dimension(lam)

    def test_column_orthogonality(self):
        # sum_lambda chi(mu) chi(nu) = delta * |centralizer|
        import math

        n = 5
        for mu in partitions(n):
            for nu in partitions(n):
                s = sum(sn_character(lam, mu) * sn_character(lam, nu) for lam in partitions(n))
                expect = math.factorial(n) // class_size(mu) if mu == nu else 0
                assert s == expect

    def test_hook_dimensions_sum_of_squares(self):
        import math

        for n in range(1, 8):
            assert sum(irrep_dimension(lam) ** 2 for lam in partitions(n)) == math.factorial(n)


class TestWeingarten:
    def test_n2_closed_forms(self):
        for D in (3, 5, 17):
            wg = weingarten_exact(2, D)
            assert wg((1, 1)) == Fraction(1, D * D - 1)
            # minus sign: the Gram pseudo-inverse forces it even though some
            # references print the off-diagonal entry unsigned
            assert wg((2,)) == Fraction(-1, D * (D * D - 1))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    @pytest.mark.parametrize("dim", [7, 11, 64])
    def test_gram_orthogonality(self, n, dim):
        # sum_sigma D^{#(pi sigma^-1)} Wg(sigma) = delta_{pi, e}
        wg = weingarten_exact(n, dim)
        elems = list(all_perms(n))
        for pi in [identity(n), conjugacy_representative((n,)), elems[len(elems) // 2]]:
            s = sum(
                Fraction(dim) ** compose(pi, sigma.inverse()).cycle_count()
                * wg(sigma.cycle_type())
                for sigma in elems
            )
            assert s == (1 if pi.is_identity() else 0)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_backends_agree(self, n):
        for dim in (7, 64):
            a = weingarten_exact(n, dim, backend="characters")
            b = weingarten_exact(n, dim, backend="gram")
            assert a.values == b.values

    def test_dim_equal_n_allowed(self):
        a = weingarten_exact(4, 4, backend="characters")
        b = weingarten_exact(4, 4, backend="gram")
        assert a.values == b.values

    def test_dim_too_small_rejected(self):
        with pytest.raises(ValueError):
            weingarten_exact(4, 3)

    def test_of_pair_is_class_function(self):
        wg = weingarten_exact(3, 9)
        for a in all_perms(3):
            for b in all_perms(3):
                assert wg.of_pair(a, b) == wg(compose(a, b.inverse()).cycle_type())

    def test_gram_entry(self):
        e = identity(3)
        assert gram_entry(e, e, 5) == 125


class TestAsymptotic:
    def test_leading_matches_exact(self):
        # Wg(pi, sigma) ~ mu(pi, sigma) / D^{2n - #(pi sigma^-1)}
        n = 3
        for D in (200, 400):
            wg = weingarten_exact(n, D)
            for a in all_perms(n):
                for b in all_perms(n):
                    approx = weingarten_asymptotic(a, b, D)
                    exact = float(wg.of_pair(a, b))
                    if approx == 0.0:
                        continue
                    assert exact / approx == pytest.approx(1.0, abs=5.0 / D)

    def test_content_product(self):
        # lambda = (2, 1): cells (0,0),(0,1),(1,0) -> D(D+1)(D-1)
        assert content_product((2, 1), 5) == 5 * 6 * 4
