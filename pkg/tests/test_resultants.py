from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discstrata.multipoly import MultiPoly, coefficient_names, evaluate, partial_derivative
from discstrata.rational import as_rational
from discstrata.resultants import (
    discriminant,
    distinct_root_count,
    gcd,
    gcd_and_cofactors,
    resultant,
    resultant_euclid,
    squarefree_decomposition,
    subdiscriminant,
    subdiscriminant_at,
    subdiscriminant_matrix,
    subresultant_gcd,
    subresultant_prs,
    sylvester_f_fprime,
)
from discstrata.unipoly import UniPoly, X

from oracles import (
    PRINTED_D4_DA0_TERMS,
    PRINTED_D4_DA1_TERMS,
    PRINTED_D4_DA2_TERMS,
    PRINTED_D4_TERMS,
    brute_pattern,
    poly_from_terms,
    product_resultant,
    sympy_discriminant,
)

GOLDEN = Path(__file__).parent / "golden"

small_roots = st.lists(
    st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3)).map(as_rational),
    min_size=1,
    max_size=5,
)
unipolys = st.lists(st.integers(-5, 5), max_size=6).map(UniPoly)


class TestSylvesterShapes:
    @pytest.mark.parametrize("k, size", [(0, 7), (1, 5), (2, 3), (3, 1)])
    def test_quartic_shapes(self, k, size):
        assert subdiscriminant_matrix(4, k).shape == (size, size)

    def test_quartic_row_pattern(self):
        rows = sylvester_f_fprime(4).to_rows()
        a = MultiPoly.variables(4)
        assert rows[0][:5] == [1, a[3], a[2], a[1], a[0]]
        assert rows[3][:4] == [4, 3 * a[3], 2 * a[2], a[1]]
        assert all(rows[i][0] == 0 for i in (1, 2, 4, 5, 6))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_corner_entries(self, n):
        rows = sylvester_f_fprime(n).to_rows()
        assert rows[0][0] == 1
        assert rows[n - 1][0] == n

    def test_index_range(self):
        with pytest.raises(ValueError):
            subdiscriminant_matrix(4, 4)
        with pytest.raises(ValueError):
            subdiscriminant(1, 0)


class TestDiscriminant:
    def test_quadratic(self):
        assert str(discriminant(2)) == "a_1^2 - 4*a_0"

    def test_cubic(self):
        assert str(discriminant(3)) == "-4*a_2^3*a_0 + a_2^2*a_1^2 + 18*a_2*a_1*a_0 - 4*a_1^3 - 27*a_0^2"

    def test_quartic_matches_printed_terms(self):
        D = discriminant(4)
        printed = poly_from_terms(PRINTED_D4_TERMS, 4)
        assert D == printed
        assert len(D.terms) == 16

    def test_quartic_first_partials_match_printed(self):
        D = discriminant(4)
        assert partial_derivative(D, 0) == poly_from_terms(PRINTED_D4_DA0_TERMS, 4)
        assert partial_derivative(D, 1) == poly_from_terms(PRINTED_D4_DA1_TERMS, 4)
        assert partial_derivative(D, 2) == poly_from_terms(PRINTED_D4_DA2_TERMS, 4)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_sympy(self, n):
        assert discriminant(n) == sympy_discriminant(n)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_golden(self, n):
        expected = (GOLDEN / f"discriminant_{n}.txt").read_text().strip()
        assert str(discriminant(n)) == expected

    @pytest.mark.parametrize("n, count", [(2, 2), (3, 5), (4, 16), (5, 59), (6, 246)])
    def test_term_counts(self, n, count):
        assert len(discriminant(n).terms) == count

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_weighted_homogeneity(self, n):
        # a_i has weight n - i; D is homogeneous of weight n(n-1)
        for mon in discriminant(n).terms:
            assert sum((n - i) * e for i, e in enumerate(mon)) == n * (n - 1)


class TestSubdiscriminants:
    def test_top_is_n(self):
        for n in range(2, 7):
            assert subdiscriminant(n, n - 1) == n

    @pytest.mark.parametrize("k", range(4))
    def test_quartic_golden(self, k):
        expected = (GOLDEN / f"subdiscriminant_4_{k}.txt").read_text().strip()
        assert str(subdiscriminant(4, k)) == expected

    def test_quartic_values(self):
        assert str(subdiscriminant(4, 2)) == "3*a_3^2 - 8*a_2"
        assert subdiscriminant_at((4, 0, 4, 0), 2) == -32

    @given(st.lists(st.integers(-5, 5), min_size=4, max_size=4), st.integers(0, 3))
    @settings(max_examples=60, deadline=None)
    def test_numeric_matches_symbolic(self, coords, k):
        assert subdiscriminant_at(coords, k) == evaluate(subdiscriminant(4, k), coords)

    @given(small_roots)
    @settings(max_examples=60, deadline=None)
    def test_vanishing_chain_matches_gcd_degree(self, roots):
        if len(roots) < 2:
            return
        f = UniPoly.from_roots(roots)
        n = f.degree
        d = gcd(f, f.derivative()).degree
        values = [subdiscriminant_at(f.coeffs[:-1], j) for j in range(n)]
        assert all(v == 0 for v in values[:d])
        assert values[d] != 0


class TestResultant:
    def test_linear_pair(self):
        # product formula lc^.. * prod(r - s) with r = 1, s = 2
        assert resultant(X - 1, X - 2) == -1
        assert product_resultant(1, [1], 1, [2]) == -1

    def test_against_constant(self):
        assert resultant(X ** 3 + 2 * X + 5, UniPoly((1,))) == 1

    def test_zero_input(self):
        with pytest.raises(ValueError):
            resultant(UniPoly(), X)

    @given(small_roots, small_roots, st.integers(1, 3), st.integers(-3, 3).filter(bool))
    @settings(max_examples=80, deadline=None)
    def test_product_formula(self, rp, rq, lp, lq):
        p = UniPoly.from_roots(rp) * lp
        q = UniPoly.from_roots(rq) * lq
        assert resultant(p, q) == product_resultant(lp, rp, lq, rq)

    @given(unipolys, unipolys)
    @settings(max_examples=80, deadline=None)
    def test_euclid_agrees_with_sylvester(self, p, q):
        if p.is_zero() or q.is_zero():
            return
        assert resultant(p, q) == resultant_euclid(p, q)

    def test_discriminant_relation(self):
        # D = (-1)^{n(n-1)/2} res(F, F') for monic F
        for n in (2, 3, 4):
            f = [MultiPoly.variable(i, coefficient_names(n)) for i in range(n)]
            f.append(MultiPoly.constant(1, coefficient_names(n)))
            fp = [f[i] * i for i in range(1, n + 1)]
            sign = -1 if (n * (n - 1) // 2) % 2 else 1
            assert resultant(f, fp).scale(sign) == discriminant(n)

    def test_shifted_resultant_valuation_for_triple_root(self):
        f = (X - 1) ** 3 * (X - 2)
        names = ("t",)
        t = MultiPoly.variable(0, names)
        coeffs = [MultiPoly.constant(c, names) for c in f.coeffs]
        coeffs[0] = coeffs[0] + t
        fp = [MultiPoly.constant(c, names) for c in f.derivative().coeffs]
        assert resultant(coeffs, fp).min_degree() == 2


class TestGcd:
    def test_double_root(self):
        f = (X - 1) ** 2 * (X + 2)
        assert gcd(f, f.derivative()) == X - 1

    def test_power(self):
        assert gcd(X ** 4, 4 * X ** 3) == X ** 3

    def test_coprime(self):
        g, a, b = gcd_and_cofactors(X ** 2 + 1, X)
        assert g == 1 and a == X ** 2 + 1 and b == X

    @given(unipolys, unipolys, unipolys)
    @settings(max_examples=80, deadline=None)
    def test_subresultant_gcd_agrees(self, p, q, common):
        if common.is_zero():
            return
        a, b = p * common, q * common
        if a.is_zero() or b.is_zero():
            return
        g = gcd(a, b)
        assert subresultant_gcd(a, b) == g
        assert (a % g).is_zero() and (b % g).is_zero()
        assert (g % common).is_zero()

    def test_prs_ends_in_gcd_multiple(self):
        f = (X - 1) ** 3 * (X + 2)
        seq = subresultant_prs(f, f.derivative())
        assert seq[-1].monic() == (X - 1) ** 2


class TestSquarefree:
    def test_two_double_roots(self):
        dec = squarefree_decomposition(X ** 4 - 2 * X ** 2 + 1)
        assert dec.factors == ((X ** 2 - 1, 2),)
        assert dec.pattern() == (2, 2)

    def test_table_quartic(self):
        dec = squarefree_decomposition(UniPoly((6, -17, 17, -7, 1)))
        assert dec.factors == ((X ** 2 - 5 * X + 6, 1), (X - 1, 2))
        assert dec.pattern() == (2, 1, 1)

    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_pure_power(self, n):
        assert squarefree_decomposition(X ** n).factors == ((X, n),)

    @given(small_roots)
    @settings(max_examples=80, deadline=None)
    def test_pattern_matches_roots(self, roots):
        f = UniPoly.from_roots(roots)
        dec = squarefree_decomposition(f)
        assert dec.reconstruct() == f
        assert dec.pattern() == brute_pattern(roots)

    def test_requires_monic(self):
        with pytest.raises(ValueError):
            squarefree_decomposition(2 * X ** 2)


class TestDistinctRootCount:
    @pytest.mark.parametrize(
        "coeffs, m",
        [((24, -50, 35, -10, 1), 4), ((1, -4, 6, -4, 1), 1), ((4, 0, 4, 0, 1), 2)],
    )
    def test_quartics(self, coeffs, m):
        assert distinct_root_count(UniPoly(coeffs)) == m
