from cluster_match.laurent import (
    CanonicalForm,
    LaurentPolynomial,
    Monomial,
    div_exact,
    eval,
    format_laurent,
    from_json_terms,
    is_strictly_positive,
    parse_laurent,
    pow,
    split_denominator,
    swap_vars,
    to_json_terms,
)
from cluster_match.types import NonUnitAtNegativeExponent, NotDivisible, ParseError

import json
import unittest

from hypothesis import given, settings, strategies as st

x1 = LaurentPolynomial.x1()
x2 = LaurentPolynomial.x2()

laurent = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    st.integers(-20, 20),
    max_size=6,
).map(LaurentPolynomial)

nonzero_laurent = laurent.filter(bool)


class TestArithmetic(unittest.TestCase):
    def test_zero_terms_are_pruned(self):
        p = (x1 + x2) - x2
        self.assertEqual(p, x1)
        self.assertEqual(len(p), 1)
        self.assertTrue((x1 - x1).is_zero)

    def test_constant_comparison(self):
        self.assertEqual(LaurentPolynomial.one(), 1)
        self.assertEqual(x1 * 0, 0)
        self.assertNotEqual(x1, 1)

    def test_constants_hash_like_ints(self):
        self.assertEqual(len({1, LaurentPolynomial.one()}), 1)
        self.assertEqual(hash(LaurentPolynomial.zero()), hash(0))
        self.assertEqual(hash(LaurentPolynomial({(0, 0): 7})), hash(7))
        self.assertEqual({x1 - x1: "zero"}[0], "zero")

    def test_pow_zero_is_one(self):
        self.assertEqual(pow(x1 + x2, 0), 1)
        self.assertEqual(pow(LaurentPolynomial.zero(), 0), 1)

    def test_binomial_expansion(self):
        p = (x2 + 1) ** 4
        self.assertEqual(p.coefficient(0, 2), 6)
        self.assertEqual(p.coefficient(0, 4), 1)
        self.assertEqual(eval(p, 1, 1), 16)

    def test_monomial(self):
        m = Monomial(2, -1)
        self.assertEqual(m.e1, 2)
        self.assertEqual(m.e2, -1)
        self.assertTrue(m.is_monomial)
        self.assertFalse((2 * x1).is_monomial)
        self.assertEqual(Monomial.of(x1 * x2), Monomial(1, 1))

    @given(laurent, laurent)
    def test_addition_commutes(self, a, b):
        self.assertEqual(a + b, b + a)

    @given(laurent, laurent, laurent)
    @settings(max_examples=50)
    def test_distributive(self, a, b, c):
        self.assertEqual(a * (b + c), a * b + a * c)

    @given(laurent, laurent, laurent)
    @settings(max_examples=50)
    def test_multiplication_associates(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))

    @given(laurent, laurent)
    def test_swap_is_a_ring_map(self, a, b):
        self.assertEqual(swap_vars(a * b), swap_vars(a) * swap_vars(b))
        self.assertEqual(swap_vars(a + b), swap_vars(a) + swap_vars(b))
        self.assertEqual(swap_vars(swap_vars(a)), a)


class TestDivision(unittest.TestCase):
    def test_monomial_denominator(self):
        p = (x2 + 1) ** 4 + x1**4
        q = div_exact(p, x1**4 * x2)
        self.assertEqual(q * x1**4 * x2, p)
        self.assertEqual(q.min_exponents(), (-4, -1))

    def test_polynomial_divisor(self):
        self.assertEqual(div_exact(x1**2 - 1, x1 - 1), x1 + 1)
        self.assertEqual((x1**3 * x2 - x2) // (x1 - 1), x2 * (x1**2 + x1 + 1))

    def test_not_divisible(self):
        with self.assertRaises(NotDivisible):
            div_exact(x1 + 1, x2 + 1)
        with self.assertRaises(NotDivisible):
            div_exact(LaurentPolynomial.one(), x1 + 1)
        with self.assertRaises(NotDivisible):
            div_exact(3 * x1, 2 * x1)
        with self.assertRaises(NotDivisible):
            div_exact(x1, LaurentPolynomial.zero())

    def test_zero_numerator(self):
        self.assertTrue(div_exact(LaurentPolynomial.zero(), x1 + 1).is_zero)

    @given(laurent, nonzero_laurent)
    @settings(max_examples=60)
    def test_product_divides_back(self, a, b):
        self.assertEqual(div_exact(a * b, b), a)


class TestEvaluation(unittest.TestCase):
    def test_at_ones(self):
        self.assertEqual(eval(Monomial(-3, 2) + 2 * x2, 1, 1), 3)

    def test_at_minus_one(self):
        self.assertEqual(eval(Monomial(-1, 0) + x2, -1, 1), 0)

    def test_negative_power_at_non_unit(self):
        with self.assertRaises(NonUnitAtNegativeExponent):
            eval(Monomial(-1, 0), 2, 1)
        self.assertEqual(eval(x1**3 + x2, 2, 5), 13)

    def test_positivity(self):
        self.assertTrue(is_strictly_positive((x2 + 1) ** 3 + x1**4))
        self.assertFalse(is_strictly_positive(x1 - 1))
        self.assertFalse(is_strictly_positive(LaurentPolynomial.zero()))


class TestText(unittest.TestCase):
    def test_canonical_order(self):
        p = (x2 + 1) ** 4 + x1**4
        self.assertEqual(
            format_laurent(p), "x1^4 + x2^4 + 4*x2^3 + 6*x2^2 + 4*x2 + 1"
        )

    def test_negative_exponents_and_signs(self):
        p = x1 - 2 * Monomial(0, -1)
        self.assertEqual(format_laurent(p), "x1 - 2*x2^-1")
        self.assertEqual(format_laurent(-x1), "-x1")
        self.assertEqual(format_laurent(LaurentPolynomial.zero()), "0")

    def test_parse(self):
        self.assertEqual(parse_laurent("x2*x1^2 - 3 + x1^-1"), x1**2 * x2 - 3 + Monomial(-1, 0))
        self.assertEqual(parse_laurent(" 2 * x1 * x1 "), 2 * x1**2)
        with self.assertRaises(ParseError):
            parse_laurent("x3 + 1")
        with self.assertRaises(ParseError):
            parse_laurent("")

    @given(laurent)
    def test_print_parse_round_trip(self, a):
        self.assertEqual(parse_laurent(format_laurent(a)), a)

    def test_json_terms(self):
        p = 3 * x1**2 * x2 - Monomial(0, -2)
        data = json.loads(json.dumps(to_json_terms(p)))
        self.assertEqual(data, [[2, 1, "3"], [0, -2, "-1"]])
        self.assertEqual(from_json_terms(data), p)
        with self.assertRaises(ParseError):
            from_json_terms([[1, "a", "2"]])

    def test_big_coefficients_survive_json(self):
        p = LaurentPolynomial.constant(10**40 + 1) * x1
        self.assertEqual(from_json_terms(json.dumps(to_json_terms(p))), p)


class TestCanonicalForm(unittest.TestCase):
    def test_split_denominator(self):
        num, den = split_denominator(div_exact(x1**4 + 1, x2))
        self.assertEqual(num, x1**4 + 1)
        self.assertEqual(den, Monomial(0, 1))

    def test_binomial_power_collapses(self):
        p = div_exact((x2**2 + 1) ** 2 + x1**2, x1**2 * x2)
        self.assertEqual(str(CanonicalForm.of(p)), "((x2^2+1)^2 + x1^2) / (x1^2*x2)")

    def test_single_binomial(self):
        p = div_exact(x2 + 1, x1)
        self.assertEqual(str(CanonicalForm.of(p)), "(x2+1) / (x1)")

    def test_no_denominator(self):
        self.assertEqual(str(CanonicalForm.of(x1)), "x1")

    def test_round_trip(self):
        p = div_exact((x2 + 1) ** 3 + x1**4, x1**3 * x2)
        self.assertEqual(CanonicalForm.of(p).to_laurent(), p)


if __name__ == "__main__":
    unittest.main()
