"""Exact linear algebra: oracles, matrix lemmas, and their cross-checks."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpdist.linalg import (
    AibjAnalysis,
    CharPoly,
    RationalMatrix,
    SingularMatrixError,
    SpectrumClaim,
    aibj_analysis,
    char_poly_exact,
    det_exact,
    imat,
    inverse_exact,
    jmat,
    ones_col,
    rank,
    rank_one_update_inverse,
    rational_str,
    schur_inverse,
    swap2,
    zmat,
)
from cpdist.rng import Lcg, random_invertible, random_matrix, random_rank_one


def small_int_matrix(order):
    return st.lists(
        st.lists(st.integers(-5, 5), min_size=order, max_size=order),
        min_size=order,
        max_size=order,
    ).map(RationalMatrix.from_rows)


class TestDeterminant:
    def test_identity(self):
        assert det_exact(imat(5)) == 1

    def test_swap(self):
        assert det_exact(swap2()) == -1

    def test_path3_distance(self):
        # D(P_3); the tree determinant formula gives 4 at n=3
        d = RationalMatrix.from_rows([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
        assert det_exact(d) == 4

    def test_rational_entries(self):
        m = RationalMatrix.from_rows([
            [Fraction(1, 2), Fraction(1, 3)],
            [Fraction(1, 5), Fraction(1, 7)],
        ])
        assert det_exact(m) == Fraction(1, 14) - Fraction(1, 15)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            det_exact(jmat(2, 3))

    def test_zero_column(self):
        m = RationalMatrix.from_rows([[0, 1], [0, 2]])
        assert det_exact(m) == 0

    @settings(max_examples=40, deadline=None)
    @given(small_int_matrix(3), small_int_matrix(3))
    def test_multiplicative(self, a, b):
        assert det_exact(a * b) == det_exact(a) * det_exact(b)


class TestInverse:
    def test_identity(self):
        assert inverse_exact(imat(4)) == imat(4)

    def test_two_by_two(self):
        m = RationalMatrix.from_rows([[2, 1], [1, 2]])
        expected = RationalMatrix.from_rows([
            [Fraction(2, 3), Fraction(-1, 3)],
            [Fraction(-1, 3), Fraction(2, 3)],
        ])
        assert inverse_exact(m) == expected

    def test_complete_graph_distance(self):
        # D(K_3) = J - I; inverse computed by the exact product check
        d = jmat(3, 3) - imat(3)
        inv = inverse_exact(d)
        half = Fraction(1, 2)
        expected = RationalMatrix.from_rows([
            [-half, half, half],
            [half, -half, half],
            [half, half, -half],
        ])
        assert inv == expected
        assert d * inv == imat(3)

    def test_singular_reports_rank(self):
        m = RationalMatrix.from_rows([[1, 2], [2, 4]])
        with pytest.raises(SingularMatrixError) as err:
            inverse_exact(m)
        assert err.value.rank == 1

    def test_seeded_roundtrips(self):
        rng = Lcg(11)
        for _ in range(20):
            order = rng.randint(1, 8)
            a = random_invertible(rng, order)
            inv = inverse_exact(a)
            assert a * inv == imat(order)
            assert inv * a == imat(order)


class TestRank:
    def test_full(self):
        assert rank(imat(3)) == 3

    def test_ones(self):
        assert rank(jmat(4, 4)) == 1

    def test_rectangular(self):
        assert rank(jmat(2, 5)) == 1


class TestCharPoly:
    def test_zero_matrix(self):
        poly = char_poly_exact(zmat(2, 2))
        assert poly.coeffs == (Fraction(0), Fraction(0), Fraction(1))

    def test_swap(self):
        poly = char_poly_exact(swap2())
        assert poly.coeffs == (Fraction(-1), Fraction(0), Fraction(1))

    def test_ones_matrix(self):
        # eigenvalues 3, 0, 0; frozen by evaluating det(xI - J_3) at samples
        poly = char_poly_exact(jmat(3, 3))
        assert poly.coeffs == (Fraction(0), Fraction(0), Fraction(-3), Fraction(1))
        for x in (0, 1, 2, 4):
            assert poly.evaluate(x) == det_exact(x * imat(3) - jmat(3, 3))

    def test_rational_matrix(self):
        m = RationalMatrix.from_rows([[Fraction(1, 2), 1], [0, Fraction(1, 3)]])
        poly = char_poly_exact(m)
        assert poly.evaluate(Fraction(1, 2)) == 0
        assert poly.evaluate(Fraction(1, 3)) == 0

    @settings(max_examples=30, deadline=None)
    @given(small_int_matrix(4), st.integers(-3, 3))
    def test_matches_shifted_determinant(self, m, x):
        assert char_poly_exact(m).evaluate(x) == det_exact(x * imat(4) - m)

    def test_pretty_printing(self):
        poly = CharPoly((Fraction(-16), Fraction(-2), Fraction(1)))
        assert str(poly) == "x^2 - 2*x - 16"

    def test_division(self):
        product = CharPoly.linear(2) * CharPoly.linear(-3) * CharPoly.linear(5)
        quotient, remainder = product.divide_by(CharPoly.linear(-3))
        assert remainder == (Fraction(0),)
        assert quotient == CharPoly.linear(2) * CharPoly.linear(5)

    def test_non_monic_rejected(self):
        with pytest.raises(ValueError):
            CharPoly((Fraction(1), Fraction(2)))


class TestSchurInverse:
    def test_block_diagonal(self):
        a = RationalMatrix.from_rows([[2, 0], [0, 3]])
        c = RationalMatrix.from_rows([[5]])
        full = RationalMatrix.block([[a, zmat(2, 1)], [zmat(1, 2), c]])
        assert schur_inverse(a, zmat(2, 1), zmat(1, 2), c) == inverse_exact(full)

    def test_star_distance_partition(self):
        # D(K_{n,1}) split along the leaf block; the hub corner of the
        # inverse is -2(n-1)/n, e.g. -4/3 at n=3
        n = 3
        b11 = 2 * (jmat(n, n) - imat(n))
        b12 = ones_col(n)
        b21 = b12.transpose()
        b22 = zmat(1, 1)
        inv = schur_inverse(b11, b12, b21, b22)
        assert inv.data[n][n] == Fraction(-4, 3)
        full = RationalMatrix.block([[b11, b12], [b21, b22]])
        assert inv == inverse_exact(full)

    def test_seeded_oracle_equivalence(self):
        rng = Lcg(23)
        for _ in range(10):
            m = random_matrix(rng, 6, 6)
            lead = m.submatrix([0, 1, 2])
            if det_exact(m) == 0 or det_exact(lead) == 0:
                continue
            head, rest = [0, 1, 2], [3, 4, 5]
            assembled = schur_inverse(
                lead,
                m.submatrix(head, rest),
                m.submatrix(rest, head),
                m.submatrix(rest, rest),
            )
            assert assembled == inverse_exact(m)

    def test_singular_leading_block(self):
        with pytest.raises(SingularMatrixError, match="leading block singular"):
            schur_inverse(zmat(1, 1), jmat(1, 1), jmat(1, 1), zmat(1, 1))

    def test_singular_schur_complement(self):
        # [[1, 1], [1, 1]] has invertible leading block but zero complement
        one = jmat(1, 1)
        with pytest.raises(SingularMatrixError, match="schur complement singular"):
            schur_inverse(one, one, one, one)


class TestRankOneUpdate:
    def test_identity_plus_ones(self):
        result = rank_one_update_inverse(imat(2), jmat(2, 2))
        expected = RationalMatrix.from_rows([
            [Fraction(2, 3), Fraction(-1, 3)],
            [Fraction(-1, 3), Fraction(2, 3)],
        ])
        assert result == expected

    def test_bipartite_schur_trace(self):
        # the m = n = 3 complete-bipartite reduction: g = -mn/(4(n-1)(m-1))
        a = 2 * (jmat(3, 3) - imat(3))
        update = Fraction(-3, 4) * jmat(3, 3)
        a_inv = inverse_exact(a)
        g = (update * a_inv).trace()
        assert g == Fraction(-9, 16)
        assert rank_one_update_inverse(a_inv, update) == inverse_exact(a + update)

    def test_seeded_oracle_equivalence(self):
        rng = Lcg(31)
        for _ in range(10):
            a = random_invertible(rng, 5)
            while True:
                update = random_rank_one(rng, 5)
                if det_exact(a + update) != 0:
                    break
            result = rank_one_update_inverse(inverse_exact(a), update)
            assert result == inverse_exact(a + update)

    def test_rejects_higher_rank(self):
        with pytest.raises(ValueError, match="rank exactly 1"):
            rank_one_update_inverse(imat(2), imat(2))

    def test_rejects_singular_update(self):
        # A = I, B = -uu^t with |u|^2 = 1 makes A + B singular (g = -1)
        update = RationalMatrix.from_rows([[-1, 0], [0, 0]])
        with pytest.raises(ValueError, match="singular"):
            rank_one_update_inverse(imat(2), update)


class TestAibjAnalysis:
    def test_doubled_ones_minus_identity(self):
        analysis = aibj_analysis(-2, 2, 3)
        assert analysis.det == 16
        assert analysis.eigs.pairs == ((Fraction(-2), 2), (Fraction(4), 1))
        matrix = -2 * imat(3) + 2 * jmat(3, 3)
        assert char_poly_exact(matrix) == analysis.eigs.char_poly()

    def test_plain_identity(self):
        analysis = aibj_analysis(1, 0, 4)
        assert analysis.det == 1
        assert analysis.inverse == imat(4)

    def test_singular_boundary(self):
        analysis = aibj_analysis(2, -1, 2)
        assert analysis.det == 0
        assert analysis.inverse is None

    def test_rejects_zero_a(self):
        with pytest.raises(ValueError):
            aibj_analysis(0, 1, 3)

    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(-3, 3).filter(bool),
        st.integers(-3, 3),
        st.integers(2, 6),
    )
    def test_grid_against_oracles(self, a, b, n):
        analysis = aibj_analysis(a, b, n)
        matrix = a * imat(n) + b * jmat(n, n)
        assert analysis.det == det_exact(matrix)
        if a + n * b != 0:
            assert matrix * analysis.inverse == imat(n)


class TestExchangeAndOnesIdentities:
    def test_swap_squares_to_identity(self):
        assert swap2() * swap2() == imat(2)

    @pytest.mark.parametrize("r", range(2, 7))
    @pytest.mark.parametrize("s", range(2, 7))
    def test_ones_absorb_swap(self, r, s):
        assert swap2() * jmat(2, s) == jmat(2, s)
        assert jmat(r, 2) * swap2() == jmat(r, 2)

    def test_swap_conjugation(self):
        assert swap2() * jmat(2, 2) * swap2() == jmat(2, 2)

    @pytest.mark.parametrize("t", range(2, 7))
    def test_ones_products(self, t):
        for r in (2, 4, 6):
            for s in (3, 5):
                assert jmat(r, t) * jmat(t, s) == t * jmat(r, s)


class TestSpectrumClaim:
    def test_canonicalization(self):
        claim = SpectrumClaim.make([(2, 1), (Fraction(2), 2), (5, 0)])
        assert claim.pairs == ((Fraction(2), 3),)

    def test_total_order_counts_quadratic(self):
        quad = CharPoly((Fraction(-16), Fraction(-2), Fraction(1)))
        claim = SpectrumClaim.make([(1, 2)], quad)
        assert claim.total_order == 4
        assert claim.trace_sum() == 2 + 2  # eigenvalue sum plus quadratic root sum

    def test_rejects_non_quadratic_factor(self):
        with pytest.raises(ValueError):
            SpectrumClaim.make([(1, 1)], CharPoly.linear(3))


def test_rational_str():
    assert rational_str(Fraction(3)) == "3"
    assert rational_str(Fraction(-1, 2)) == "-1/2"


def test_block_assembly_and_submatrix():
    m = RationalMatrix.block([
        [imat(2), jmat(2, 1)],
        [zmat(1, 2), 3 * imat(1)],
    ])
    assert m.rows == m.cols == 3
    assert m.data[0] == [1, 0, 1]
    assert m.data[2] == [0, 0, 3]
    assert m.submatrix([0, 2]) == RationalMatrix.from_rows([[1, 1], [0, 3]])
    assert m.transpose().data[2] == [1, 1, 3]
