"""
FVS Service - Exact minimum feedback vertex sets of small graphs
"""
import logging
from collections import deque

import networkx as nx

from apps.graphs.models import Graph, VertexSet
from apps.graphs.services import GraphService
from apps.shared.caps import check_cap

logger = logging.getLogger(__name__)


class FvsService:
    """Branching on short cycles of the 2-core"""

    @staticmethod
    def fvs_exact(graph: Graph) -> VertexSet:
        """
        Minimum feedback vertex set; among minimum sets the lexicographically
        smallest sorted tuple is returned.

        Raises:
            CapExceededError: graph above the fvs cap
        """
        check_cap("fvs", graph.n, "Exact feedback vertex set")

        size = 0
        while not FvsService._solvable(graph, size, frozenset()):
            size += 1

        chosen: list[int] = []
        rejected: set[int] = set()
        for vertex in graph.vertices:
            if len(chosen) == size:
                break
            remaining = graph.without([*chosen, vertex])
            if FvsService._solvable(remaining, size - len(chosen) - 1, frozenset(rejected | {vertex})):
                chosen.append(vertex)
            else:
                rejected.add(vertex)
        logger.debug(f"fvs of n={graph.n}, m={graph.m}: {chosen}")
        return frozenset(chosen)

    @staticmethod
    def is_forest(graph: Graph) -> bool:
        return nx.is_forest(graph.nx_view) if graph.n else True

    @staticmethod
    def _solvable(graph: Graph, budget: int, forbidden: frozenset[int]) -> bool:
        """Some X with |X| <= budget, X disjoint from forbidden, leaves a forest"""
        core = graph.induced(nx.k_core(graph.nx_view, 2).nodes) if graph.m else graph.induced(())
        if core.n == 0:
            return True
        if budget <= 0:
            return False

        # removing a vertex of degree d destroys at most d - 1 independent cycles
        gains = sorted((core.degree(v) - 1 for v in core.vertices if v not in forbidden), reverse=True)
        if sum(gains[:budget]) < GraphService.cyclomatic_number(core):
            return False

        for vertex in sorted(FvsService._short_cycle(core)):
            if vertex in forbidden:
                continue
            if FvsService._solvable(core.without({vertex}), budget - 1, forbidden):
                return True
        return False

    @staticmethod
    def _short_cycle(core: Graph) -> frozenset[int]:
        """Vertex set of a short closed walk: two BFS tree paths plus a non-tree edge"""
        best: frozenset[int] | None = None
        for root in core.vertices:
            parent = {root: root}
            queue = deque([root])
            found = None
            while queue and found is None:
                current = queue.popleft()
                for neighbour in sorted(core.neighbors(current)):
                    if neighbour not in parent:
                        parent[neighbour] = current
                        queue.append(neighbour)
                    elif parent[current] != neighbour:
                        found = (current, neighbour)
                        break
            if found is None:
                continue
            members: set[int] = set()
            for end in found:
                while end != root:
                    members.add(end)
                    end = parent[end]
            members.add(root)
            if best is None or len(members) < len(best):
                best = frozenset(members)
        return best or frozenset()
