from cluster_match.closed_forms import (
    SubsetCountQuery,
    binom,
    chebyshev_s,
    explicit_x22,
    m14,
    m22,
    multichoose,
    q_22,
    sq_oct,
    subset_count_bruteforce,
    subset_count_formula,
    subset_count_multiset,
    tilde_m14,
)
from cluster_match.graphs import build_H, build_tildeG14
from cluster_match.laurent import LaurentPolynomial, Monomial
from cluster_match.matching import match_polynomial
from cluster_match.recurrence import SequenceCache
from cluster_match.types import (
    CaseParams,
    GroundSetTooLarge,
    IndexOutOfFamily,
    UnsupportedCase,
)

import unittest

from hypothesis import given, settings, strategies as st

x1 = LaurentPolynomial.x1()
x2 = LaurentPolynomial.x2()


class TestBinomials(unittest.TestCase):
    def test_conventions(self):
        self.assertEqual(binom(5, 2), 10)
        self.assertEqual(binom(-1, 0), 1)
        self.assertEqual(binom(-1, 1), 0)
        self.assertEqual(binom(3, 4), 0)
        self.assertEqual(binom(3, -1), 0)

    def test_multichoose(self):
        self.assertEqual(multichoose(3, 2), 6)
        self.assertEqual(multichoose(0, 0), 1)
        self.assertEqual(multichoose(0, 1), 0)
        self.assertEqual(multichoose(-1, 0), 0)


class TestDenominators(unittest.TestCase):
    def test_sq_oct(self):
        self.assertEqual(sq_oct(3), (1, 0))
        self.assertEqual(sq_oct(0), (0, 1))
        self.assertEqual(sq_oct(4), (4, 1))
        self.assertEqual(sq_oct(7), (5, 2))
        self.assertEqual(sq_oct(-2), (4, 3))
        self.assertEqual(sq_oct(-1), (1, 1))
        with self.assertRaises(IndexOutOfFamily):
            sq_oct(2)

    def test_monomials(self):
        self.assertEqual(m14(7), Monomial(5, 2))
        self.assertEqual(m22(5), Monomial(3, 2))
        self.assertEqual(tilde_m14(7), Monomial(4, 2))
        self.assertEqual(tilde_m14(-3), Monomial(4, 2))
        self.assertEqual(tilde_m14(3), 1)
        with self.assertRaises(IndexOutOfFamily):
            m22(2)
        with self.assertRaises(IndexOutOfFamily):
            tilde_m14(6)


class TestExplicit22(unittest.TestCase):
    def test_first_values(self):
        self.assertEqual(explicit_x22(3), (x2**2 + 1) // x1)
        self.assertEqual(explicit_x22(0), (x1**2 + 1) // x2)

    def test_agrees_with_recurrence(self):
        cache = SequenceCache(CaseParams(2, 2))
        for n in list(range(-12, 1)) + list(range(3, 16)):
            with self.subTest(n=n):
                self.assertEqual(explicit_x22(n), cache.x_at(n))

    def test_generators_have_no_formula(self):
        with self.assertRaises(IndexOutOfFamily):
            explicit_x22(1)


class TestSubsetCounts(unittest.TestCase):
    def test_example(self):
        qy = SubsetCountQuery(5, 1, 1)
        self.assertEqual(subset_count_formula(qy), 2)
        self.assertEqual(subset_count_bruteforce(qy), 2)

    def test_empty_ground_set(self):
        self.assertEqual(subset_count_formula(SubsetCountQuery(0, 0, 0)), 1)
        self.assertEqual(subset_count_formula(SubsetCountQuery(0, 1, 0)), 0)

    @given(st.integers(0, 14), st.integers(0, 8), st.integers(0, 8))
    @settings(max_examples=200, deadline=None)
    def test_formula_matches_bruteforce(self, n, q, r):
        qy = SubsetCountQuery(n, q, r)
        expected = subset_count_bruteforce(qy)
        self.assertEqual(subset_count_formula(qy), expected)
        self.assertEqual(subset_count_multiset(qy), expected)

    def test_ground_set_too_large(self):
        with self.assertRaises(GroundSetTooLarge):
            subset_count_bruteforce(SubsetCountQuery(30, 1, 1))

    def test_grid_coefficients_count_subsets(self):
        for m in range(1, 11):
            p = match_polynomial(build_H(m))
            for e1, e2, c in p:
                with self.subTest(m=m, e1=e1, e2=e2):
                    qy = SubsetCountQuery(m - 1, e2 // 2, e1 // 2)
                    self.assertEqual(c, subset_count_bruteforce(qy))


class TestChebyshev(unittest.TestCase):
    def test_initial_values(self):
        self.assertEqual(chebyshev_s((2, 2), 0), 1)
        self.assertEqual(chebyshev_s((2, 2), 1), (x1**2 + x2**2 + 1) // (x1 * x2))
        z = chebyshev_s((1, 4), 1)
        self.assertEqual(chebyshev_s((1, 4), 2), z * z - 1)

    def test_semicanonical_22(self):
        for n in range(0, 8):
            with self.subTest(n=n):
                lhs = chebyshev_s((2, 2), n) * Monomial(n, n)
                self.assertEqual(lhs, match_polynomial(build_H(2 * n + 1)))

    def test_semicanonical_14(self):
        for n in range(0, 6):
            with self.subTest(n=n):
                lhs = chebyshev_s((1, 4), n) * tilde_m14(2 * n + 3)
                self.assertEqual(lhs, match_polynomial(build_tildeG14(2 * n + 3)))

    def test_unsupported(self):
        with self.assertRaises(UnsupportedCase):
            chebyshev_s((1, 3), 2)
        with self.assertRaises(IndexOutOfFamily):
            chebyshev_s((2, 2), -1)

    def test_transfer_recurrence(self):
        for m in range(0, 12):
            with self.subTest(m=m):
                self.assertEqual(q_22(m), match_polynomial(build_H(m)))


if __name__ == "__main__":
    unittest.main()
