"""
Structure Service - Blocks, leaf-blocks and alpha-robustness
"""
import logging

import networkx as nx

from ..models import BlockDecomposition
from apps.graphs.models import Graph
from apps.graphs.services import GraphService
from apps.shared.exceptions import InvalidGraphError, PreconditionError
from apps.shared.messages.error import ERROR_MESSAGES

logger = logging.getLogger(__name__)


class StructureService:
    """Block structure, slb and the alpha-prune fixed point"""

    @staticmethod
    def block_decomposition(graph: Graph) -> BlockDecomposition:
        """
        Split the graph into biconnected components.

        Bridges are blocks of size 2; isolated vertices form no block.
        """
        view = graph.nx_view
        blocks = sorted(
            (frozenset(block) for block in nx.biconnected_components(view)),
            key=lambda block: (min(block), sorted(block)),
        )
        cut_vertices = frozenset(nx.articulation_points(view))
        leaf_blocks = tuple(block for block in blocks if len(block & cut_vertices) <= 1)
        return BlockDecomposition(tuple(blocks), cut_vertices, leaf_blocks)

    @staticmethod
    def slb(graph: Graph) -> int:
        """
        Size of the smallest leaf-block.

        Raises:
            InvalidGraphError: graph has no edges
        """
        decomposition = StructureService.block_decomposition(graph)
        if not decomposition.leaf_blocks:
            raise InvalidGraphError(ERROR_MESSAGES["EDGELESS_SLB"])
        return min(len(block) for block in decomposition.leaf_blocks)

    @staticmethod
    def is_alpha_robust(graph: Graph, alpha: int) -> bool:
        """
        |V(G)| >= alpha and no single vertex deletion leaves a component
        on fewer than alpha - 1 vertices.
        """
        StructureService._check_alpha(alpha)
        if graph.n < alpha:
            return False
        for vertex in graph.vertices:
            if StructureService._small_components(graph, vertex, alpha):
                return False
        return True

    @staticmethod
    def alpha_prune(graph: Graph, alpha: int) -> Graph:
        """
        The unique maximal alpha-robust subgraph (possibly empty).

        Whenever some v leaves components of G - v with fewer than
        alpha - 1 vertices, those components are deleted (v stays). No vertex
        of such a component lies in an alpha-robust subgraph, so the fixed
        point contains all of them; it is itself robust once it has at
        least alpha vertices.
        """
        StructureService._check_alpha(alpha)
        current = graph
        changed = True
        while changed:
            changed = False
            for vertex in current.vertices:
                doomed = StructureService._small_components(current, vertex, alpha)
                if doomed:
                    current = current.without(doomed)
                    changed = True
                    break
        if current.n < alpha:
            return Graph.empty()
        if current.n < graph.n:
            logger.debug(f"alpha_prune({alpha}) kept {current.n} of {graph.n} vertices")
        return current

    @staticmethod
    def _small_components(graph: Graph, vertex: int, alpha: int) -> frozenset[int]:
        rest = graph.without({vertex})
        doomed: set[int] = set()
        for component in GraphService.connected_components(rest):
            if len(component) < alpha - 1:
                doomed |= component
        return frozenset(doomed)

    @staticmethod
    def _check_alpha(alpha: int) -> None:
        if alpha < 1:
            raise PreconditionError(ERROR_MESSAGES["INVALID_ALPHA"].format(alpha=alpha))
