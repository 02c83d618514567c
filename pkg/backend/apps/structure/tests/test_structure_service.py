from itertools import combinations

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from apps.graphs.models import Graph
from apps.minors.services import MinorService
from apps.shared.exceptions import InvalidGraphError, PreconditionError
from apps.shared.testing import (
    FULL_ACCEPTANCE,
    C,
    K,
    P,
    atlas_graphs,
    brute_alpha_prune,
    brute_is_robust,
    edgeless,
    graphs,
    minor_pairs,
    star,
    union,
)
from apps.structure.services import StructureService


def triangle_with_pendant() -> Graph:
    return Graph.from_edges(range(4), [(0, 1), (1, 2), (0, 2), (0, 3)])


class BlockDecompositionTestCase(SimpleTestCase):

    def test_bridges_are_blocks(self):
        decomposition = StructureService.block_decomposition(P(4))

        self.assertEqual(len(decomposition.blocks), 3)
        self.assertEqual(decomposition.cut_vertices, frozenset({1, 2}))
        self.assertEqual(len(decomposition.leaf_blocks), 2)

    def test_biconnected_graph_is_its_own_leaf_block(self):
        decomposition = StructureService.block_decomposition(C(5))

        self.assertEqual(decomposition.leaf_blocks, (frozenset(range(5)),))
        self.assertEqual(decomposition.cut_vertices, frozenset())

    def test_isolated_vertices_form_no_block(self):
        decomposition = StructureService.block_decomposition(union(K(2), K(1)))

        self.assertEqual(decomposition.blocks, (frozenset({0, 1}),))


class SlbTestCase(SimpleTestCase):

    def test_triangle(self):
        self.assertEqual(StructureService.slb(K(3)), 3)

    def test_path(self):
        self.assertEqual(StructureService.slb(P(3)), 2)

    def test_triangle_with_pendant(self):
        self.assertEqual(StructureService.slb(triangle_with_pendant()), 2)

    def test_two_triangles_sharing_a_vertex(self):
        bowtie = Graph.from_edges(range(5), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])

        self.assertEqual(StructureService.slb(bowtie), 3)

    def test_edgeless_graph_rejected(self):
        with self.assertRaises(InvalidGraphError):
            StructureService.slb(edgeless(3))


class AlphaRobustTestCase(SimpleTestCase):

    def test_path_prunes_to_nothing(self):
        self.assertEqual(StructureService.alpha_prune(P(5), 3).n, 0)

    def test_pendant_is_pruned(self):
        pruned = StructureService.alpha_prune(triangle_with_pendant(), 3)

        self.assertEqual(pruned.vertex_set, frozenset({0, 1, 2}))
        self.assertEqual(pruned.m, 3)

    def test_star_is_not_robust_above_two(self):
        self.assertFalse(StructureService.is_alpha_robust(star(3), 3))
        self.assertTrue(StructureService.is_alpha_robust(star(3), 2))

    def test_small_graph_is_not_robust(self):
        self.assertFalse(StructureService.is_alpha_robust(K(2), 3))

    def test_alpha_must_be_positive(self):
        with self.assertRaises(PreconditionError):
            StructureService.alpha_prune(K(3), 0)

    @settings(deadline=None, max_examples=40)
    @given(graphs(max_vertices=6))
    def test_prune_is_the_union_of_robust_subgraphs(self, graph):
        for alpha in (2, 3, 4):
            pruned = StructureService.alpha_prune(graph, alpha)

            self.assertEqual(pruned.vertex_set, brute_alpha_prune(graph, alpha))
            self.assertTrue(pruned.n == 0 or brute_is_robust(pruned, alpha))
            self.assertTrue(pruned.n == 0 or StructureService.is_alpha_robust(pruned, alpha))


def same_graph(first: Graph, second: Graph) -> bool:
    return (first.vertex_set, first.edges) == (second.vertex_set, second.edges)


def prune(graph: Graph, alpha: int) -> Graph:
    return StructureService.alpha_prune(graph, alpha)


class PruneLawsTestCase(SimpleTestCase):
    """Fixed-point laws of alpha_prune, exhaustive on small graphs and sampled above"""

    def check_prune_laws(self, graph: Graph):
        for alpha in range(1, graph.n + 2):
            once = prune(graph, alpha)
            self.assertTrue(same_graph(prune(once, alpha), once))
            for beta in range(1, alpha + 1):
                self.assertTrue(same_graph(prune(prune(graph, beta), alpha), once))
                self.assertTrue(same_graph(prune(once, beta), once))

    def check_slb_matches_robustness(self, graph: Graph):
        slb = StructureService.slb(graph)
        for alpha in range(1, graph.n + 2):
            self.assertEqual(StructureService.is_alpha_robust(graph, alpha), slb >= alpha)

    def test_prune_laws_on_all_small_graphs(self):
        for graph in atlas_graphs(6):
            with self.subTest(graph=graph):
                self.check_prune_laws(graph)

    @settings(deadline=None, max_examples=10_000 if FULL_ACCEPTANCE else 100)
    @given(graphs(min_vertices=7, max_vertices=8))
    def test_prune_laws(self, graph):
        self.check_prune_laws(graph)

    def test_slb_matches_robustness_on_all_small_connected_graphs(self):
        for graph in atlas_graphs(7, min_vertices=2, connected=True):
            with self.subTest(graph=graph):
                self.check_slb_matches_robustness(graph)

    @settings(deadline=None, max_examples=10_000 if FULL_ACCEPTANCE else 100)
    @given(graphs(min_vertices=2, max_vertices=8, connected=True))
    def test_slb_matches_robustness(self, graph):
        self.check_slb_matches_robustness(graph)

    def test_isolated_vertex_counts_for_robustness_but_not_for_slb(self):
        graph = union(K(3), K(1))

        self.assertEqual(StructureService.slb(graph), 3)
        self.assertFalse(StructureService.is_alpha_robust(graph, 3))

    @settings(deadline=None, max_examples=25)
    @given(graphs(max_vertices=6))
    def test_union_of_robust_subgraphs_is_robust(self, graph):
        for alpha in (3, 4):
            robust = [
                frozenset(chosen)
                for size in range(alpha, graph.n + 1)
                for chosen in combinations(graph.vertices, size)
                if brute_is_robust(graph.induced(chosen), alpha)
            ]
            for first, second in combinations(robust, 2):
                self.assertTrue(StructureService.is_alpha_robust(graph.induced(first | second), alpha))

    @settings(deadline=None, max_examples=60)
    @given(graphs(max_vertices=4), graphs(max_vertices=4), st.sampled_from([1, 3, 4]))
    def test_prune_splits_over_disjoint_union(self, first, second, alpha):
        shifted = {v + first.n for v in prune(second, alpha).vertex_set}

        self.assertEqual(prune(union(first, second), alpha).vertex_set, prune(first, alpha).vertex_set | shifted)

    def test_two_prune_of_a_disjoint_union_keeps_single_vertices(self):
        # every graph on two or more vertices is 2-robust
        self.assertEqual(prune(K(1), 2).n, 0)
        self.assertEqual(prune(union(K(1), K(1)), 2).vertex_set, frozenset({0, 1}))

    @settings(deadline=None, max_examples=1000 if FULL_ACCEPTANCE else 60)
    @given(minor_pairs(max_vertices=7), st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=2))
    def test_pruning_preserves_minors(self, pair, beta, gap):
        graph, minor = pair
        alpha = beta + gap

        self.assertIsNotNone(MinorService.contains_minor(prune(graph, beta), prune(minor, alpha)))

    @settings(deadline=None, max_examples=1000 if FULL_ACCEPTANCE else 40)
    @given(minor_pairs(max_vertices=6), st.integers(min_value=1, max_value=3), st.integers(min_value=3, max_value=5))
    def test_pruning_preserves_componentwise_minors(self, pair, beta, alpha):
        graph, minor = pair
        pattern = union(minor, minor)

        self.assertTrue(MinorService.componentwise_minor(pattern, graph))
        self.assertTrue(MinorService.componentwise_minor(prune(pattern, alpha), prune(graph, beta)))

    def test_componentwise_pruning_needs_alpha_above_two(self):
        self.assertTrue(MinorService.componentwise_minor(union(K(1), K(1)), K(1)))
        self.assertFalse(MinorService.componentwise_minor(prune(union(K(1), K(1)), 2), prune(K(1), 2)))
