from cluster_match.config import ClusterConfig
from cluster_match.types import CaseParams, IdentityId, Interval, UnknownIdentity, UnsupportedCase
from cluster_match.verifier import (
    PolynomialSource,
    expected_period,
    run_full_suite,
    to_json,
    verify_identity,
    verify_main_theorem,
)

import json
import unittest


class TestIdentities(unittest.TestCase):
    def assertPassed(self, report):
        self.assertTrue(report.passed, [(n, str(a), str(b)) for n, a, b in report.failures])
        self.assertGreater(report.checked, 0)

    def test_main_theorems(self):
        self.assertPassed(verify_main_theorem((1, 4), Interval(-5, 8)))
        self.assertPassed(verify_main_theorem((4, 1), Interval(-5, 8)))
        self.assertPassed(verify_main_theorem((2, 2), Interval(3, 9)))

    def test_main_theorem_needs_a_family(self):
        with self.assertRaises(UnsupportedCase):
            verify_main_theorem((1, 3), Interval(3, 5))

    def test_affine_22_identities(self):
        for identity in ("P_RECUR_22", "LINEAR_22", "ODD_Q_22", "DISJOINT_22"):
            with self.subTest(identity=identity):
                self.assertPassed(verify_identity(identity, Interval(4, 8)))

    def test_step_identities(self):
        for identity in (IdentityId.STEP1_14, IdentityId.STEP2_14):
            with self.subTest(identity=identity):
                self.assertPassed(verify_identity(identity, Interval(-3, 4)))

    def test_tilde_identities(self):
        for identity in (
            IdentityId.TILDE_LINEAR,
            IdentityId.MIXED,
            IdentityId.TILDES,
            IdentityId.KEYSTEP,
            IdentityId.PROD_DIFF,
            IdentityId.THREE_TERM,
        ):
            with self.subTest(identity=identity):
                self.assertPassed(verify_identity(identity, Interval(-3, 4)))

    def test_semicanonical_recurrence(self):
        self.assertPassed(verify_identity(IdentityId.SEMI_14, Interval(2, 5)))

    def test_invalid_indices_are_skipped(self):
        report = verify_identity(IdentityId.MAIN_14, Interval(0, 3))
        self.assertTrue(report.passed)
        self.assertEqual(report.checked, 2)
        self.assertIn("2 indices", report.note)

    def test_structural_checks(self):
        self.assertPassed(verify_identity("reciprocity", Interval(0, 5), (2, 2)))
        self.assertPassed(verify_identity("positivity", Interval(-4, 6), (4, 1)))
        self.assertPassed(verify_identity("periodicity", Interval(1, 12), (1, 3)))
        self.assertPassed(verify_identity("shape_reciprocity", Interval(0, 2)))

    def test_positivity_over_wide_range(self):
        for case in [(2, 2), (1, 4)]:
            with self.subTest(case=case):
                report = verify_identity("positivity", Interval(-12, 12), case)
                self.assertPassed(report)
                self.assertEqual(report.checked, 23)

    def test_unknown_identity(self):
        with self.assertRaises(UnknownIdentity):
            verify_identity("NOT_AN_IDENTITY", Interval(0, 1))

    def test_expected_periods(self):
        self.assertEqual(expected_period(CaseParams(1, 1)), 5)
        self.assertEqual(expected_period(CaseParams(3, 1)), 8)
        self.assertIsNone(expected_period(CaseParams(1, 4)))

    def test_source_memoizes(self):
        source = PolynomialSource()
        self.assertIs(source.p14(5), source.p14(5))
        self.assertIs(source.x((1, 4), 6), source.x(CaseParams(1, 4), 6))


class TestSuite(unittest.TestCase):
    def test_full_suite_passes(self):
        reports = run_full_suite(10)
        failed = [r.identity.value for r in reports if not r.passed]
        self.assertEqual(failed, [])
        self.assertEqual({r.identity for r in reports}, set(IdentityId))
        reciprocity = {r.note for r in reports if r.identity == IdentityId.RECIPROCITY}
        self.assertIn("case (4,1)", reciprocity)
        self.assertIn("case (1,4)", reciprocity)

    def test_workers_keep_order(self):
        serial = run_full_suite(5)
        threaded = run_full_suite(5, ClusterConfig().with_workers(4))
        self.assertEqual(
            [(r.identity, r.note) for r in serial],
            [(r.identity, r.note) for r in threaded],
        )

    def test_small_bound_rejected(self):
        with self.assertRaises(ValueError):
            run_full_suite(4)

    def test_json_report(self):
        data = json.loads(to_json([verify_identity(IdentityId.TILDES, Interval(2, 3))]))
        self.assertEqual(data[0]["identity"], "TILDES")
        self.assertEqual(data[0]["range"], [2, 3])
        self.assertTrue(data[0]["passed"])
        self.assertEqual(data[0]["failures"], [])


if __name__ == "__main__":
    unittest.main()
