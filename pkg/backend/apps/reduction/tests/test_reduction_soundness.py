from itertools import combinations

from django.test import SimpleTestCase

from apps.family.services import FamilyService
from apps.kernel.services import BruteForceService
from apps.minors.models import ContainmentType
from apps.minors.services import SubgraphService
from apps.reduction.models import CnfFormula
from apps.reduction.services import CnfService, InstanceService
from apps.shared.testing import FULL_ACCEPTANCE, K, P, copies, sample
from apps.structure.services import TreewidthService


def small_formulas(max_literals: int | None = None) -> list[CnfFormula]:
    """All formulas over k <= 2 variables with 1 or 2 distinct clauses of 1 or 2 literals"""
    formulas = []
    for k in (1, 2):
        literals = [literal for variable in range(1, k + 1) for literal in (variable, -variable)]
        clauses = [(literal,) for literal in literals] + list(combinations(literals, 2))
        for count in (1, 2):
            for chosen in combinations(clauses, count):
                formula = CnfFormula(k=k, clauses=chosen)
                if max_literals is None or formula.n <= max_literals:
                    formulas.append(formula)
    return formulas


CORPUS = small_formulas() if FULL_ACCEPTANCE else sample(small_formulas(max_literals=2), 3)


class ConnectedReductionSoundnessTestCase(SimpleTestCase):

    def test_satisfiable_iff_yes(self):
        for pattern in (P(3), K(3)):
            for formula in CORPUS:
                artifact = InstanceService.build_instance_connected(pattern, formula)
                satisfiable = CnfService.satisfying_assignment(formula) is not None

                with self.subTest(pattern_m=pattern.m, k=formula.k, clauses=formula.clauses):
                    self.assertEqual(artifact.ell, formula.k + 3 * formula.n - 2 * formula.m)
                    self.assertEqual(len(artifact.modulator), 2 * formula.k)
                    witness = BruteForceService.brute_force_delete(
                        artifact.graph, [pattern], ContainmentType.MINOR, artifact.ell
                    )
                    self.assertEqual(witness is not None, satisfiable)
                    if not satisfiable:
                        self.assertIsNone(BruteForceService.brute_force_delete(
                            artifact.graph, [pattern], ContainmentType.SUBGRAPH, artifact.ell
                        ))

    def test_corpus_has_both_outcomes(self):
        outcomes = {CnfService.satisfying_assignment(formula) is not None for formula in CORPUS}

        self.assertEqual(outcomes, {True, False})


def deletion_number(graph, members) -> int:
    return len(BruteForceService.brute_force_delete(graph, members, ContainmentType.MINOR, graph.n))


class FamilyReductionSoundnessTestCase(SimpleTestCase):

    def test_single_triangle_family(self):
        family = FamilyService.build_family([K(3)])
        for formula in CORPUS:
            artifact = InstanceService.build_instance_family(family, formula)
            satisfiable = CnfService.satisfying_assignment(formula) is not None

            with self.subTest(k=formula.k, clauses=formula.clauses):
                self.assertEqual(artifact.filler, frozenset())
                witness = BruteForceService.brute_force_delete(
                    artifact.graph, family.members, ContainmentType.MINOR, artifact.ell
                )
                self.assertEqual(witness is not None, satisfiable)

    def test_two_triangle_family(self):
        family = FamilyService.build_family([copies(K(3), 2)])
        formulas = CORPUS if FULL_ACCEPTANCE else [formula for formula in CORPUS if formula.k == 1]
        for formula in formulas:
            artifact = InstanceService.build_instance_family(family, formula)
            inner = InstanceService.build_instance_connected(K(3), formula)
            satisfiable = CnfService.satisfying_assignment(formula) is not None

            with self.subTest(k=formula.k, clauses=formula.clauses):
                self.assertEqual(artifact.ell, 3 * inner.ell)
                # G is three copies of G'; at most one copy may keep a triangle minor
                triangle = deletion_number(inner.graph, [K(3)])
                two_triangles = deletion_number(inner.graph, family.members)
                self.assertEqual(2 * triangle + two_triangles <= artifact.ell, satisfiable)
                if FULL_ACCEPTANCE:
                    witness = BruteForceService.brute_force_delete(
                        artifact.graph, family.members, ContainmentType.MINOR, artifact.ell
                    )
                    self.assertEqual(witness is not None, satisfiable)


class ReductionShapeTestCase(SimpleTestCase):
    """Modulator and packing conditions for both builders"""

    def artifacts(self):
        for formula in CORPUS:
            for pattern in (P(3), K(3)):
                limit = TreewidthService.treewidth_exact(pattern)
                yield "connected", limit, InstanceService.build_instance_connected(pattern, formula)
            for members in ([K(3)], [copies(K(3), 2)]):
                family = FamilyService.build_family(members)
                yield "family", family.mintw, InstanceService.build_instance_family(family, formula)

    def test_modulator_leaves_small_treewidth(self):
        for builder, limit, artifact in self.artifacts():
            with self.subTest(builder=builder, ell=artifact.ell, n=artifact.graph.n):
                rest = artifact.graph.without(artifact.modulator)
                self.assertLessEqual(TreewidthService.treewidth_exact(rest), limit)

    def test_packing_has_ell_disjoint_copies(self):
        for builder, _, artifact in self.artifacts():
            packing = InstanceService.instance_packing(artifact)
            with self.subTest(builder=builder, ell=artifact.ell, n=artifact.graph.n):
                self.assertEqual(len(packing), artifact.ell)
                self.assertEqual(len(frozenset().union(*packing)), sum(len(block) for block in packing))
                for block in packing:
                    self.assertIsNotNone(
                        SubgraphService.contains_subgraph(artifact.graph.induced(block), artifact.pattern)
                    )
