"""
Matching Service - Maximum matchings and Tutte-Berge partitions
"""
import logging

import networkx as nx

from ..models import TBPartition
from apps.graphs.models import Edge, Graph, VertexSet
from apps.graphs.services import GraphService
from apps.shared.exceptions import PreconditionError
from apps.shared.messages.error import ERROR_MESSAGES

logger = logging.getLogger(__name__)


class MatchingService:
    """Blossom matchings and the partition witnessing nu(G) <= m"""

    @staticmethod
    def max_matching(graph: Graph) -> frozenset[Edge]:
        """Maximum-cardinality matching, edges as (u, v) with u < v"""
        matching = nx.max_weight_matching(graph.nx_view, maxcardinality=True)
        return frozenset((min(u, v), max(u, v)) for u, v in matching)

    @staticmethod
    def matching_number(graph: Graph) -> int:
        return len(MatchingService.max_matching(graph)) if graph.m else 0

    @staticmethod
    def gallai_edmonds_hub(graph: Graph) -> VertexSet:
        """
        A = N(D) minus D, where D holds the vertices missed by some maximum
        matching; A attains the minimum in the Tutte-Berge formula.
        """
        nu = MatchingService.matching_number(graph)
        missed = frozenset(
            v for v in graph.vertices
            if MatchingService.matching_number(graph.without({v})) == nu
        )
        return graph.neighborhood(missed) - missed

    @staticmethod
    def tutte_berge_partition(graph: Graph, m: int) -> TBPartition | None:
        """
        Partition (U, R, S) with |U| + (|R| - odd(G[R])) / 2 <= m.

        Args:
            graph: Graph to split
            m: Matching bound, m >= 0

        Returns:
            The partition, or None exactly when nu(G) > m
        """
        if m < 0:
            raise PreconditionError(ERROR_MESSAGES["NEGATIVE_MATCHING_BOUND"].format(m=m))
        nu = MatchingService.matching_number(graph)
        if nu > m:
            return None

        hub = MatchingService.gallai_edmonds_hub(graph)
        rest = graph.without(hub)
        fixes: set[int] = set()
        for component in GraphService.connected_components(rest):
            if len(component) % 2 == 0:
                fixes.add(MatchingService._smallest_non_cut_vertex(rest.induced(component)))

        u = frozenset(hub | fixes)
        remainder = graph.without(u)
        s = remainder.isolated
        r = remainder.vertex_set - s
        partition = TBPartition(u=u, r=r, s=s)
        logger.debug(f"Tutte-Berge partition for nu={nu} <= {m}: {partition.as_lists()}")
        return partition

    @staticmethod
    def verify_partition(graph: Graph, partition: TBPartition, m: int) -> bool:
        """
        Check the four partition conditions for bound m.

        Raises:
            PreconditionError: U, R, S do not partition V(G)
        """
        u, r, s = partition.u, partition.r, partition.s
        if (u & r) or (u & s) or (r & s) or (u | r | s) != graph.vertex_set:
            raise PreconditionError(ERROR_MESSAGES["NOT_A_PARTITION"])

        odd_part = graph.induced(r)
        components = GraphService.connected_components(odd_part)
        if any(len(component) < 3 or len(component) % 2 == 0 for component in components):
            return False
        if graph.induced(s).m:
            return False
        if not graph.neighborhood(s) <= u:
            return False
        return 2 * len(u) + len(r) - len(components) <= 2 * m

    @staticmethod
    def _smallest_non_cut_vertex(component: Graph) -> int:
        cut = set(nx.articulation_points(component.nx_view))
        return min(v for v in component.vertices if v not in cut)
