"""
Subgraph Service - Subgraph containment through VF2 monomorphisms
"""
import logging
from typing import Iterator

from networkx.algorithms.isomorphism import GraphMatcher

from apps.graphs.models import Graph, VertexSet
from apps.shared.caps import check_cap

logger = logging.getLogger(__name__)


class SubgraphService:
    """Injective, edge-preserving embeddings of a pattern into a host"""

    @staticmethod
    def contains_subgraph(graph: Graph, pattern: Graph) -> dict[int, int] | None:
        """
        First embedding found by the matcher, as pattern vertex -> host vertex.

        Raises:
            CapExceededError: pattern above the pattern cap
        """
        check_cap("pattern", pattern.n, "Subgraph pattern")
        for embedding in SubgraphService._embeddings(graph, pattern):
            return embedding
        return None

    @staticmethod
    def occurrences(graph: Graph, pattern: Graph) -> list[VertexSet]:
        """Distinct vertex sets that carry a copy of the pattern, in canonical order"""
        check_cap("pattern", pattern.n, "Subgraph pattern")
        images = {frozenset(embedding.values()) for embedding in SubgraphService._embeddings(graph, pattern)}
        return sorted(images, key=lambda image: sorted(image))

    @staticmethod
    def _embeddings(graph: Graph, pattern: Graph) -> Iterator[dict[int, int]]:
        if pattern.n == 0:
            yield {}
            return
        if pattern.n > graph.n or pattern.m > graph.m or pattern.max_degree > graph.max_degree:
            return
        matcher = GraphMatcher(graph.nx_view, pattern.nx_view)
        for mapping in matcher.subgraph_monomorphisms_iter():
            yield {h: g for g, h in mapping.items()}
