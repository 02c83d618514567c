from unittest.mock import patch

from django.test import SimpleTestCase

from apps.family.services import FamilyService
from apps.reduction.models import CnfFormula
from apps.reduction.services import GadgetService, InstanceService, VerificationService
from apps.shared.caps import override_caps
from apps.shared.exceptions import CapExceededError
from apps.shared.testing import K, P, copies


class VerifyGadgetTestCase(SimpleTestCase):

    def test_known_gadgets_pass(self):
        for pattern, n in ((K(3), 1), (K(3), 2), (P(3), 1), (P(3), 2)):
            report = VerificationService.verify_gadget(pattern, n)

            with self.subTest(n=n, pattern_n=pattern.n, pattern_m=pattern.m):
                self.assertTrue(report.passed, report.as_dict())
                self.assertEqual(
                    [check.name for check in report.checks][-n:],
                    [f"solution_{j}" for j in range(1, n + 1)],
                )

    def test_caps(self):
        with self.assertRaises(CapExceededError):
            VerificationService.verify_gadget(K(3), 3)
        with self.assertRaises(CapExceededError):
            VerificationService.verify_gadget(K(5), 1)

    def test_broken_solution_is_reported(self):
        original = GadgetService.clause_gadget_solution

        def without_s(labels, j):
            return original(labels, j) - {labels.copy(j).s}

        with patch("apps.reduction.services.verification_service.GadgetService.clause_gadget_solution", side_effect=without_s):
            report = VerificationService.verify_gadget(K(3), 1)

        self.assertFalse(report.passed)
        self.assertEqual(report.failures, ["solution_1"])
        self.assertEqual(report.as_dict()["checks"][-1]["status"], "failed")


class VerifyInstanceTestCase(SimpleTestCase):

    def test_satisfiable_instance(self):
        formula = CnfFormula(k=1, clauses=((1,),))
        artifact = InstanceService.build_instance_connected(K(3), formula)

        report = VerificationService.verify_instance(artifact, formula, None)

        self.assertTrue(report.passed, report.as_dict())
        self.assertEqual(
            [check.name for check in report.checks],
            ["ell", "modulator_size", "modulator", "packing", "assignment_solution", "soundness"],
        )

    def test_unsatisfiable_instance(self):
        formula = CnfFormula(k=1, clauses=((1,), (-1,)))
        artifact = InstanceService.build_instance_connected(K(3), formula)

        report = VerificationService.verify_instance(artifact, formula, None)

        self.assertTrue(report.passed, report.as_dict())
        self.assertNotIn("assignment_solution", [check.name for check in report.checks])

    def test_family_instance_above_the_verify_cap(self):
        formula = CnfFormula(k=1, clauses=((1,),))
        family = FamilyService.build_family([copies(K(3), 2)])
        artifact = InstanceService.build_instance_family(family, formula)

        with override_caps(verify=10), self.assertLogs("apps.reduction", level="WARNING"):
            report = VerificationService.verify_instance(artifact, formula, family)

        soundness = report.checks[-1]
        self.assertEqual(soundness.name, "soundness")
        self.assertIsNone(soundness.passed)
        self.assertTrue(report.passed, report.as_dict())

    def test_wrong_budget_is_reported(self):
        formula = CnfFormula(k=1, clauses=((1,),))
        artifact = InstanceService.build_instance_connected(K(3), formula)
        tampered = type(artifact)(
            graph=artifact.graph,
            ell=artifact.ell + 1,
            modulator=artifact.modulator,
            pattern=artifact.pattern,
            parts=artifact.parts,
        )

        report = VerificationService.verify_instance(tampered, formula, None)

        self.assertIn("ell", report.failures)
