from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings

from apps.graphs.models import Graph
from apps.kernel.services import BruteForceService
from apps.minors.models import ContainmentType
from apps.minors.services import MinorService
from apps.shared.exceptions import CapExceededError
from apps.shared.testing import C, K, P, brute_deletion_number, copies, graphs, petersen, union

MINOR = ContainmentType.MINOR
SUBGRAPH = ContainmentType.SUBGRAPH


class BruteForceTestCase(SimpleTestCase):

    def test_free_graph_needs_nothing(self):
        self.assertEqual(BruteForceService.brute_force_delete(P(4), [K(3)], MINOR, 0), frozenset())

    def test_triangle_hitting(self):
        self.assertEqual(len(BruteForceService.brute_force_delete(K(4), [K(3)], MINOR, 2)), 2)
        self.assertIsNone(BruteForceService.brute_force_delete(K(4), [K(3)], MINOR, 1))

    def test_empty_member_is_never_avoided(self):
        self.assertIsNone(BruteForceService.brute_force_delete(K(3), [Graph.empty()], MINOR, 3))

    def test_cycles_as_minors(self):
        found = BruteForceService.brute_force_delete(petersen(), [K(3)], MINOR, 3)

        self.assertEqual(len(found), 3)
        self.assertTrue(MinorService.is_type_free(petersen().without(found), [K(3)], MINOR))

    def test_strategies_agree(self):
        graph = union(C(5), K(4))
        family = [copies(P(2), 3)]

        by_subsets = BruteForceService.brute_force_delete(graph, family, SUBGRAPH, 9, strategy="subsets")
        by_branching = BruteForceService.brute_force_delete(graph, family, SUBGRAPH, 9, strategy="branching")

        self.assertEqual(len(by_subsets), len(by_branching))

    @override_settings(FDEL_CAPS={"brute": 4, "pattern": 12})
    def test_subset_strategy_cap(self):
        with self.assertRaises(CapExceededError):
            BruteForceService.brute_force_delete(K(5), [K(3)], MINOR, 3, strategy="subsets")

    @override_settings(FDEL_CAPS={"brute": 4, "pattern": 12})
    def test_auto_switches_to_branching(self):
        self.assertEqual(len(BruteForceService.brute_force_delete(K(5), [K(3)], MINOR, 3)), 3)

    @settings(deadline=None, max_examples=25)
    @given(graphs(max_vertices=5))
    def test_minimum_matches_exhaustive_search(self, graph):
        for family in ([K(3)], [copies(P(2), 2)], [P(3), C(4)]):
            optimum = brute_deletion_number(graph, family)
            for strategy in ("subsets", "branching"):
                found = BruteForceService.brute_force_delete(graph, family, MINOR, graph.n, strategy=strategy)

                self.assertEqual(len(found), optimum)
                self.assertTrue(MinorService.is_type_free(graph.without(found), family, MINOR))
