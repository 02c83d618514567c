"""
VC Service - Simulated vertex cover oracle: safe reductions plus exact branching
"""
import logging

from django.conf import settings

from ..models import QueryRecord
from .query_log_service import QueryLog
from apps.graphs.models import Graph, VertexSet
from apps.matching.services import MatchingService
from apps.shared.caps import check_cap, get_cap
from apps.shared.exceptions import PreconditionError
from apps.shared.messages.error import ERROR_MESSAGES
from apps.structure.services import FvsService

logger = logging.getLogger(__name__)


class VcService:
    """Vertex cover decisions on oracle queries"""

    @staticmethod
    def reduce_vc(graph: Graph, budget: int) -> tuple[Graph, int]:
        """
        Apply the safe rules to a fixed point.

        Rules, first applicable wins: isolated vertices are dropped; a vertex
        of degree above the budget is taken; the neighbour of a degree-1
        vertex is taken. A negative budget stops the process. Afterwards a
        matching larger than the budget turns the answer into NO.

        Returns:
            (reduced graph, reduced budget); a negative budget means NO
        """
        current, remaining = graph, budget
        while remaining >= 0:
            if current.isolated:
                current = current.without(current.isolated)
                continue
            heavy = next((v for v in current.vertices if current.degree(v) > remaining), None)
            if heavy is not None:
                current = current.without({heavy})
                remaining -= 1
                continue
            leaf = next((v for v in current.vertices if current.degree(v) == 1), None)
            if leaf is not None:
                current = current.without(current.neighbors(leaf))
                remaining -= 1
                continue
            break

        if remaining >= 0 and MatchingService.matching_number(current) > remaining:
            remaining = -1
        return current, remaining

    @staticmethod
    def solve_vc_exact(graph: Graph, budget: int) -> bool:
        """
        Raises:
            CapExceededError: graph above the vc cap
        """
        return VcService.cover_within_budget(graph, budget) is not None

    @staticmethod
    def cover_within_budget(graph: Graph, budget: int) -> VertexSet | None:
        """
        Some vertex cover with at most budget vertices, not necessarily a
        minimum one; None when no such cover exists.
        """
        check_cap("vc", graph.n, "Exact vertex cover query")
        return VcService._cover(graph, budget)

    @staticmethod
    def vc_oracle(graph: Graph, budget: int, log: QueryLog | None = None) -> tuple[bool, QueryRecord]:
        """
        Reduce, then decide exactly, recording the query.

        Args:
            graph: Query graph G0
            budget: Query budget l0
            log: Optional log receiving the record and the reduced graph

        Raises:
            PreconditionError: negative budget
        """
        if budget < 0:
            raise PreconditionError(ERROR_MESSAGES["NEGATIVE_BUDGET"].format(budget=budget))
        reduced, reduced_budget = VcService.reduce_vc(graph, budget)
        answer = reduced_budget >= 0 and VcService.solve_vc_exact(reduced, reduced_budget)

        fvs_size = None
        if settings.FDEL_TRACK_QUERY_FVS and graph.n <= get_cap("fvs"):
            fvs_size = len(FvsService.fvs_exact(graph))

        record = QueryRecord(
            original_n=graph.n,
            reduced_n=reduced.n,
            budget=budget,
            reduced_budget=reduced_budget,
            fvs_of_query=fvs_size,
            answer=answer,
            vertices=graph.vertices,
        )
        if log is not None:
            log.append(record, reduced)
        logger.debug(f"VC query n={graph.n} -> {reduced.n}, budget {budget} -> {reduced_budget}: {answer}")
        return answer, record

    @staticmethod
    def _cover(graph: Graph, budget: int) -> VertexSet | None:
        if budget < 0:
            return None
        if graph.m == 0:
            return frozenset()
        if budget == 0 or graph.m > budget * graph.max_degree:
            return None

        pivot = min(graph.vertices, key=lambda v: (-graph.degree(v), v))
        found = VcService._cover(graph.without({pivot}), budget - 1)
        if found is not None:
            return found | {pivot}
        neighbours = graph.neighbors(pivot)
        found = VcService._cover(graph.without(neighbours), budget - len(neighbours))
        if found is not None:
            return found | neighbours
        return None
