"""
Brute Force Service - Exact minimum deletion sets by exhaustive search
"""
import logging
from itertools import combinations
from math import comb
from typing import Iterable

from apps.graphs.models import Graph, VertexSet
from apps.graphs.services import GraphService
from apps.minors.models import ContainmentType
from apps.minors.services import MinorService, PackingService
from apps.shared.caps import check_cap, get_cap

logger = logging.getLogger(__name__)

# Constants
SUBSETS = "subsets"
BRANCHING = "branching"
AUTO = "auto"
SUBSET_LIMIT = 4096


class BruteForceService:
    """
    Two exact strategies:

    subsets    every X by increasing size (reference, bounded by the brute cap)
    branching  hitting-set search: every solution hits the vertex set of each
               occurrence, so branch on the vertices of a smallest occurrence;
               iterative deepening on the budget keeps the answer minimum
    """

    @staticmethod
    def brute_force_delete(
        graph: Graph,
        family: Iterable[Graph],
        containment: ContainmentType,
        budget: int,
        strategy: str = AUTO,
    ) -> VertexSet | None:
        """
        Minimum X with |X| <= budget and G - X free of every member.

        Args:
            graph: Host graph
            family: Family or iterable of member graphs
            containment: minor or subgraph
            budget: Upper bound on |X|
            strategy: auto, subsets or branching

        Returns:
            Minimum deletion set, or None when none fits the budget

        Raises:
            CapExceededError: subsets strategy on a graph above the brute cap
        """
        members = list(family)
        containment = ContainmentType.parse(containment)
        if any(member.n == 0 for member in members):
            return None
        if MinorService.is_type_free(graph, members, containment):
            return frozenset()
        if budget <= 0:
            return None

        if strategy == AUTO:
            subsets_needed = sum(comb(graph.n, size) for size in range(budget + 1))
            small = graph.n <= get_cap("brute") and subsets_needed <= SUBSET_LIMIT
            strategy = SUBSETS if small else BRANCHING

        if strategy == SUBSETS:
            check_cap("brute", graph.n, "Brute-force subset enumeration")
            found = BruteForceService._by_subsets(graph, members, containment, budget)
        else:
            found = BruteForceService._by_branching(graph, members, containment, budget)
        logger.debug(f"Brute force ({strategy}) n={graph.n}, budget={budget}: {found}")
        return found

    @staticmethod
    def _by_subsets(
        graph: Graph, members: list[Graph], containment: ContainmentType, budget: int
    ) -> VertexSet | None:
        for size in range(1, budget + 1):
            for chosen in combinations(graph.vertices, size):
                if MinorService.is_type_free(graph.without(chosen), members, containment):
                    return frozenset(chosen)
        return None

    @staticmethod
    def _by_branching(
        graph: Graph, members: list[Graph], containment: ContainmentType, budget: int
    ) -> VertexSet | None:
        search = _HittingSetSearch(graph, members, containment)
        start = max(1, search.lower_bound(graph))
        for bound in range(start, budget + 1):
            found = search.run(bound)
            if found is not None:
                return found
        return None


class _HittingSetSearch:
    def __init__(self, graph: Graph, members: list[Graph], containment: ContainmentType):
        self.graph = graph
        self.members = members
        self.containment = containment
        self.failed: set[frozenset[int]] = set()
        # members made of c isomorphic copies of one connected graph admit a packing bound
        self.packable: list[tuple[Graph, int]] = []
        for member in members:
            components = GraphService.component_graphs(member)
            first = components[0]
            if all(GraphService.are_isomorphic(first, other) for other in components[1:]):
                self.packable.append((first, len(components)))

    def run(self, bound: int) -> VertexSet | None:
        self.failed = set()
        return self._branch(frozenset(), bound)

    def lower_bound(self, current: Graph) -> int:
        best = 0
        for component, copies in self.packable:
            packed = len(PackingService.greedy_packing(current, component, self.containment))
            best = max(best, packed - copies + 1)
        return best

    def _smallest_occurrence(self, current: Graph) -> VertexSet | None:
        best: VertexSet | None = None
        for member in self.members:
            occurrence = MinorService.find_occurrence(current, member, self.containment)
            if occurrence is not None and (best is None or len(occurrence) < len(best)):
                best = occurrence
        return best

    def _branch(self, removed: frozenset[int], remaining: int) -> VertexSet | None:
        if removed in self.failed:
            return None
        current = self.graph.without(removed)
        occurrence = self._smallest_occurrence(current)
        if occurrence is None:
            return removed
        if remaining == 0 or self.lower_bound(current) > remaining:
            self.failed.add(removed)
            return None
        for vertex in sorted(occurrence):
            found = self._branch(removed | {vertex}, remaining - 1)
            if found is not None:
                return found
        self.failed.add(removed)
        return None
