"""
Graph Service - Construction primitives over immutable graphs
"""
import logging
from typing import Iterable, Sequence

import networkx as nx

from ..models import Graph, VertexSet
from apps.shared.exceptions import InvalidGraphError
from apps.shared.messages.error import ERROR_MESSAGES

logger = logging.getLogger(__name__)


class GraphService:
    """Disjoint unions, identifications, induced subgraphs and components"""

    @staticmethod
    def disjoint_union(graphs: Sequence[Graph]) -> tuple[Graph, list[dict[int, int]]]:
        """
        Place the graphs side by side on fresh consecutive ids.

        Args:
            graphs: Operands, in order

        Returns:
            Tuple of (union, per-operand old id -> new id maps)
        """
        vertices: list[int] = []
        edges: list[tuple[int, int]] = []
        maps: list[dict[int, int]] = []
        offset = 0
        for graph in graphs:
            relabel = {old: offset + position for position, old in enumerate(graph.vertices)}
            vertices.extend(relabel.values())
            edges.extend((relabel[u], relabel[v]) for u, v in graph.edges)
            maps.append(relabel)
            offset += graph.n
        return Graph.from_edges(vertices, edges), maps

    @staticmethod
    def copies(graph: Graph, count: int) -> tuple[Graph, list[dict[int, int]]]:
        """count·G as a disjoint union"""
        return GraphService.disjoint_union([graph] * count)

    @staticmethod
    def identify(graph: Graph, u: int, v: int) -> tuple[Graph, dict[int, int]]:
        """
        Merge v into u.

        The merged vertex keeps the id u and is adjacent to N(u) ∪ N(v) minus {u, v};
        parallel edges collapse.

        Returns:
            Tuple of (new graph, old id -> new id map covering every vertex)

        Raises:
            InvalidGraphError: u = v or either vertex missing
        """
        if u == v:
            raise InvalidGraphError(ERROR_MESSAGES["SELF_IDENTIFICATION"].format(vertex=u))
        for vertex in (u, v):
            if vertex not in graph:
                raise InvalidGraphError(ERROR_MESSAGES["UNKNOWN_VERTEX"].format(vertex=vertex))

        mapping = {x: (u if x == v else x) for x in graph.vertices}
        edges = {
            (mapping[a], mapping[b])
            for a, b in graph.edges
            if mapping[a] != mapping[b]
        }
        merged = Graph.from_edges((x for x in graph.vertices if x != v), edges)
        return merged, mapping

    @staticmethod
    def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
        """
        G[S], keeping the original vertex ids.

        Raises:
            InvalidGraphError: S not contained in V(G)
        """
        members = frozenset(vertices)
        missing = members - graph.vertex_set
        if missing:
            raise InvalidGraphError(ERROR_MESSAGES["NOT_A_SUBSET"].format(missing=sorted(missing)))
        return graph.induced(members)

    @staticmethod
    def remove_vertices(graph: Graph, vertices: Iterable[int]) -> Graph:
        """G − X for X ⊆ V(G)"""
        members = frozenset(vertices)
        missing = members - graph.vertex_set
        if missing:
            raise InvalidGraphError(ERROR_MESSAGES["NOT_A_SUBSET"].format(missing=sorted(missing)))
        return graph.without(members)

    @staticmethod
    def connected_components(graph: Graph) -> list[VertexSet]:
        """Components ordered by their smallest vertex"""
        components = [frozenset(c) for c in nx.connected_components(graph.nx_view)]
        return sorted(components, key=min)

    @staticmethod
    def component_graphs(graph: Graph) -> list[Graph]:
        return [graph.induced(c) for c in GraphService.connected_components(graph)]

    @staticmethod
    def odd_component_count(graph: Graph) -> int:
        """odd(G): number of components with an odd number of vertices"""
        return sum(1 for c in GraphService.connected_components(graph) if len(c) % 2 == 1)

    @staticmethod
    def relabel_dense(graph: Graph) -> tuple[Graph, dict[int, int]]:
        """Relabel to 0..n-1 preserving vertex order"""
        mapping = {old: new for new, old in enumerate(graph.vertices)}
        relabelled = Graph.from_edges(range(graph.n), ((mapping[u], mapping[v]) for u, v in graph.edges))
        return relabelled, mapping

    @staticmethod
    def are_isomorphic(first: Graph, second: Graph) -> bool:
        if (first.n, first.m) != (second.n, second.m):
            return False
        return nx.is_isomorphic(first.nx_view, second.nx_view)

    @staticmethod
    def cyclomatic_number(graph: Graph) -> int:
        """|E| − |V| + number of components; never increases under taking minors"""
        return graph.m - graph.n + len(GraphService.connected_components(graph))


class GraphCatalog:
    """Named small graphs"""

    @staticmethod
    def complete(n: int) -> Graph:
        return Graph.from_networkx(nx.complete_graph(n))

    @staticmethod
    def path(n: int) -> Graph:
        """P_n: the path on n vertices (P2 is a single edge)"""
        return Graph.from_networkx(nx.path_graph(n))

    @staticmethod
    def cycle(n: int) -> Graph:
        return Graph.from_networkx(nx.cycle_graph(n))

    @staticmethod
    def star(leaves: int) -> Graph:
        """K_{1,leaves}, center 0"""
        return Graph.from_networkx(nx.star_graph(leaves))

    @staticmethod
    def petersen() -> Graph:
        return Graph.from_networkx(nx.petersen_graph())

    @staticmethod
    def edgeless(n: int) -> Graph:
        return Graph.from_edges(range(n), [])

    @staticmethod
    def union(*graphs: Graph) -> Graph:
        return GraphService.disjoint_union(list(graphs))[0]

    @staticmethod
    def copies(graph: Graph, count: int) -> Graph:
        return GraphService.copies(graph, count)[0]
