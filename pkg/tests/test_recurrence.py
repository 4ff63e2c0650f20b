from cluster_match.closed_forms import m14
from cluster_match.config import ClusterConfig
from cluster_match.laurent import CanonicalForm, LaurentPolynomial, Monomial, div_exact, swap_vars
from cluster_match.recurrence import SequenceCache, check_reciprocity, detect_period, eval_at_ones, x_at
from cluster_match.types import (
    CaseParams,
    IdentityId,
    Interval,
    ParseError,
    UnknownIdentity,
    UnsupportedCase,
)

import unittest

from hypothesis import given, settings, strategies as st

x1 = LaurentPolynomial.x1()
x2 = LaurentPolynomial.x2()


class TestCaseParams(unittest.TestCase):
    def test_exponent_by_parity(self):
        p = CaseParams(1, 4)
        self.assertEqual(p.exponent_at(3), 1)
        self.assertEqual(p.exponent_at(-1), 1)
        self.assertEqual(p.exponent_at(0), 4)
        self.assertEqual(p.dual(), CaseParams(4, 1))

    def test_parse(self):
        self.assertEqual(CaseParams.parse("(2,2)"), CaseParams(2, 2))
        self.assertEqual(CaseParams.parse(" 1, 4 "), (1, 4))
        with self.assertRaises(ParseError):
            CaseParams.parse("1;4")

    def test_rejects_nonpositive(self):
        with self.assertRaises(UnsupportedCase):
            CaseParams(0, 4)

    def test_affine(self):
        self.assertTrue(CaseParams(1, 4).is_affine)
        self.assertTrue(CaseParams(2, 2).is_affine)
        self.assertFalse(CaseParams(1, 3).is_affine)

    def test_interval(self):
        r = Interval(-2, 2)
        self.assertEqual(list(r), [-2, -1, 0, 1, 2])
        self.assertEqual(len(Interval(3, 1)), 0)
        self.assertIn(0, r)
        self.assertEqual(str(r), "[-2, 2]")

    def test_identity_names(self):
        self.assertEqual(IdentityId.parse("main_14"), IdentityId.MAIN_14)
        with self.assertRaises(UnknownIdentity):
            IdentityId.parse("MAIN_99")


class TestSequence(unittest.TestCase):
    def test_generators(self):
        cache = SequenceCache((1, 4))
        self.assertEqual(x_at(cache, 1), x1)
        self.assertEqual(x_at(cache, 2), x2)

    def test_first_terms(self):
        cache = SequenceCache(CaseParams(1, 4))
        self.assertEqual(cache.x_at(3), div_exact(x2 + 1, x1))
        self.assertEqual(cache.x_at(4), div_exact((x2 + 1) ** 4 + x1**4, x1**4 * x2))
        self.assertEqual(cache.x_at(0), div_exact(x1**4 + 1, x2))
        self.assertEqual(cache.x_at(-1), div_exact(x1**4 + x2 + 1, x1 * x2))

    def test_numerator_denominator_text(self):
        cache = SequenceCache(CaseParams(1, 4))
        self.assertEqual(
            str(CanonicalForm.of(cache.x_at(7))),
            "((x2+1)^5 + 2*x1^4 + 5*x1^4*x2 + 3*x1^4*x2^2 + x1^8) / (x1^5*x2^2)",
        )
        self.assertEqual(
            str(CanonicalForm.of(cache.x_at(6))),
            "((x2+1)^8 + 3*x1^4 + 16*x1^4*x2 + 34*x1^4*x2^2 + 36*x1^4*x2^3 + 19*x1^4*x2^4"
            " + 4*x1^4*x2^5 + 3*x1^8 + 8*x1^8*x2 + 6*x1^8*x2^2 + x1^12) / (x1^8*x2^3)",
        )

    def test_numerator_coefficients(self):
        cache = SequenceCache(CaseParams(1, 4))
        p6 = cache.x_at(6) * m14(6)
        self.assertTrue(p6.is_polynomial)
        self.assertEqual(p6.coefficient(4, 2), 34)
        self.assertEqual(len(p6), 19)
        minus_two = CanonicalForm.of(cache.x_at(-2))
        self.assertEqual(minus_two.numerator.coefficient(4, 1), 8)
        self.assertEqual(minus_two.denominator, Monomial(4, 3))

    def test_values_at_ones_forward(self):
        cache = SequenceCache(CaseParams(1, 4))
        expected = [2, 17, 9, 386, 43, 8857, 206, 203321, 987, 4667522, 4729]
        self.assertEqual([eval_at_ones(cache, n) for n in range(3, 14)], expected)

    def test_values_at_ones_backward(self):
        cache = SequenceCache(CaseParams(1, 4))
        expected = [2, 3, 41, 14, 937, 67, 21506, 321, 493697, 1538, 11333521, 7369]
        self.assertEqual([cache.eval_at_ones(n) for n in range(0, -12, -1)], expected)

    def test_affine_22_values(self):
        cache = SequenceCache(CaseParams(2, 2))
        self.assertEqual([cache.eval_at_ones(n) for n in range(3, 8)], [2, 5, 13, 34, 89])

    def test_cache_is_contiguous(self):
        cache = SequenceCache(CaseParams(2, 2))
        cache.x_at(6)
        cache.x_at(-3)
        self.assertEqual(sorted(cache.values), list(range(-3, 7)))

    @given(st.sampled_from([(1, 1), (1, 2), (2, 1), (1, 4), (2, 2), (3, 1)]), st.integers(-6, 8))
    @settings(max_examples=40, deadline=None)
    def test_exchange_relation_holds(self, pair, n):
        params = CaseParams(*pair)
        cache = SequenceCache(params)
        lhs = cache.x_at(n) * cache.x_at(n - 2)
        rhs = cache.x_at(n - 1) ** params.exponent_at(n) + 1
        self.assertEqual(lhs, rhs)

    @given(st.integers(-8, 10))
    @settings(max_examples=20, deadline=None)
    def test_laurent_phenomenon_with_positive_coefficients(self, n):
        x = SequenceCache(CaseParams(1, 4)).x_at(n)
        self.assertTrue(all(c > 0 for _, _, c in x))


class TestPeriodicity(unittest.TestCase):
    def test_finite_type_periods(self):
        config = ClusterConfig(period_window=6)
        self.assertEqual(detect_period((1, 1), 20, config), 5)
        self.assertEqual(detect_period((1, 2), 20, config), 6)
        self.assertEqual(detect_period((2, 1), 20, config), 6)
        self.assertEqual(detect_period((1, 3), 20, config), 8)

    def test_affine_is_not_periodic(self):
        self.assertIsNone(detect_period((2, 2), 8, ClusterConfig(period_window=4)))
        self.assertIsNone(detect_period((1, 4), 30))
        self.assertIsNone(detect_period((2, 2), 30))

    def test_bad_horizon(self):
        with self.assertRaises(ValueError):
            detect_period((1, 1), 0)


class TestReciprocity(unittest.TestCase):
    def test_swap_relates_dual_cases(self):
        left = SequenceCache(CaseParams(1, 4))
        right = SequenceCache(CaseParams(4, 1))
        self.assertEqual(left.x_at(0), swap_vars(right.x_at(3)))
        self.assertEqual(left.x_at(-2), swap_vars(right.x_at(5)))

    def test_report(self):
        for b, c in [(1, 4), (4, 1), (2, 2), (1, 3)]:
            report = check_reciprocity(b, c, Interval(0, 8))
            self.assertTrue(report.passed, report.failures)
            self.assertEqual(report.checked, 9)
            self.assertEqual(report.identity, IdentityId.RECIPROCITY)

    def test_monomials_at_generators(self):
        cache = SequenceCache(CaseParams(1, 4))
        self.assertIsInstance(cache.x_at(1), Monomial)


if __name__ == "__main__":
    unittest.main()
