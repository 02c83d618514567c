"""
Packing Service - Vertex-disjoint pattern copies
"""
import logging

from ..models import ContainmentType
from .minor_service import MinorService
from .subgraph_service import SubgraphService
from apps.graphs.models import Graph, VertexSet

logger = logging.getLogger(__name__)


class PackingService:
    """Exact and greedy packings of vertex-disjoint H-subgraphs"""

    @staticmethod
    def find_packing(graph: Graph, pattern: Graph, target: int) -> list[VertexSet] | None:
        """
        Exhaustive search for target pairwise disjoint H-subgraphs.

        Returns:
            Vertex sets of the packing, or None when fewer exist
        """
        if target <= 0:
            return []
        if pattern.n == 0:
            return [frozenset()] * target
        if target * pattern.n > graph.n:
            return None
        occurrences = SubgraphService.occurrences(graph, pattern)
        packing = PackingService._search(occurrences, target, pattern.n)
        logger.debug(f"Packing of {target} copies over {len(occurrences)} occurrences: {packing is not None}")
        return packing

    @staticmethod
    def disjoint_packing_at_least(graph: Graph, pattern: Graph, target: int) -> bool:
        return PackingService.find_packing(graph, pattern, target) is not None

    @staticmethod
    def greedy_packing(graph: Graph, pattern: Graph, containment: ContainmentType) -> list[VertexSet]:
        """
        Repeatedly take one occurrence and delete its vertices.

        The count is a lower bound on the occurrences any hitting set must
        destroy one by one.
        """
        if pattern.n == 0:
            return []
        taken: list[VertexSet] = []
        remaining = graph
        while True:
            occurrence = MinorService.find_occurrence(remaining, pattern, containment)
            if occurrence is None:
                return taken
            taken.append(occurrence)
            remaining = remaining.without(occurrence)

    @staticmethod
    def _search(occurrences: list[VertexSet], needed: int, order: int) -> list[VertexSet] | None:
        if needed == 0:
            return []
        if len(occurrences) < needed:
            return None
        covered = frozenset().union(*occurrences)
        if len(covered) < needed * order:
            return None

        pivot = min(covered)
        with_pivot = [occurrence for occurrence in occurrences if pivot in occurrence]
        without_pivot = [occurrence for occurrence in occurrences if pivot not in occurrence]
        for chosen in with_pivot:
            rest = [occurrence for occurrence in without_pivot if not occurrence & chosen]
            found = PackingService._search(rest, needed - 1, order)
            if found is not None:
                return [chosen, *found]
        return PackingService._search(without_pivot, needed, order)
