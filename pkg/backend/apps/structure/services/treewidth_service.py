"""
Treewidth Service - Exact treewidth of small graphs
"""
import logging

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_degree, treewidth_min_fill_in

from .structure_service import StructureService
from apps.graphs.models import Graph
from apps.shared.caps import check_cap
from apps.shared.messages.warning import WARNING_MESSAGES

logger = logging.getLogger(__name__)


class TreewidthService:
    """
    Exact treewidth, block by block.

    Each block is solved by a subset dynamic programme over elimination
    orders, skipped when the degeneracy lower bound meets the heuristic
    upper bound.
    """

    @staticmethod
    def treewidth_exact(graph: Graph) -> int:
        """
        Exact treewidth.

        Returns:
            -1 for the empty graph, 0 for edgeless graphs

        Raises:
            CapExceededError: largest block above the treewidth cap
        """
        if graph.n == 0:
            logger.warning(WARNING_MESSAGES["EMPTY_TREEWIDTH"])
            return -1
        if graph.m == 0:
            return 0

        blocks = StructureService.block_decomposition(graph).blocks
        check_cap("treewidth", max(len(block) for block in blocks), "Exact treewidth (largest block)")
        return max(TreewidthService._block_treewidth(graph.induced(block)) for block in blocks)

    @staticmethod
    def _block_treewidth(block: Graph) -> int:
        size = block.n
        if size <= 2:
            return size - 1
        if block.m == size * (size - 1) // 2:
            return size - 1

        view = block.nx_view
        lower = max(nx.core_number(view).values())
        upper = min(treewidth_min_fill_in(view)[0], treewidth_min_degree(view)[0])
        if lower >= upper:
            return upper
        exact = TreewidthService._elimination_dp(block, upper)
        logger.debug(f"Treewidth DP on {size} vertices: bounds [{lower}, {upper}] -> {exact}")
        return exact

    @staticmethod
    def _elimination_dp(block: Graph, upper: int) -> int:
        """
        TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where
        Q(S, v) are the vertices outside S + v reachable from v through S.
        States whose value already reaches the upper bound are dropped.
        """
        index = {vertex: position for position, vertex in enumerate(block.vertices)}
        adjacency = [0] * block.n
        for u, v in block.edges:
            adjacency[index[u]] |= 1 << index[v]
            adjacency[index[v]] |= 1 << index[u]
        full = (1 << block.n) - 1

        layer: dict[int, int] = {0: -1}
        for _ in range(block.n):
            following: dict[int, int] = {}
            for eliminated, width in layer.items():
                remaining = full & ~eliminated
                while remaining:
                    low = remaining & -remaining
                    remaining ^= low
                    vertex = low.bit_length() - 1
                    value = max(width, TreewidthService._q_size(adjacency, eliminated, vertex))
                    if value >= upper:
                        continue
                    state = eliminated | low
                    if value < following.get(state, upper):
                        following[state] = value
            layer = following
            if not layer:
                return upper
        return layer.get(full, upper)

    @staticmethod
    def _q_size(adjacency: list[int], eliminated: int, vertex: int) -> int:
        reach = adjacency[vertex] & ~eliminated
        pending = adjacency[vertex] & eliminated
        visited = 0
        while pending:
            low = pending & -pending
            pending ^= low
            visited |= low
            neighbours = adjacency[low.bit_length() - 1]
            reach |= neighbours & ~eliminated
            pending |= neighbours & eliminated & ~visited
        reach &= ~(1 << vertex)
        return bin(reach).count("1")
