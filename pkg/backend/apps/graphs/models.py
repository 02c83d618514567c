"""
Graph models - immutable simple undirected graphs with stable vertex ids
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping

import networkx as nx

from apps.shared.exceptions import InvalidGraphError
from apps.shared.messages.error import ERROR_MESSAGES

Edge = tuple[int, int]
VertexSet = frozenset[int]


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph.

    Vertices are integers kept in ascending order; edges are stored as
    (u, v) with u < v. Instances are never mutated, every operation
    returns a new graph.
    """

    vertices: tuple[int, ...] = ()
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        ordered = tuple(sorted(self.vertices))
        for left, right in zip(ordered, ordered[1:]):
            if left == right:
                raise InvalidGraphError(ERROR_MESSAGES["DUPLICATE_VERTEX"].format(vertex=left))
        known = set(ordered)
        for u, v in self.edges:
            if u == v:
                raise InvalidGraphError(ERROR_MESSAGES["SELF_LOOP"].format(vertex=u))
            if u > v or u not in known or v not in known:
                raise InvalidGraphError(ERROR_MESSAGES["UNKNOWN_ENDPOINT"].format(u=u, v=v))
        object.__setattr__(self, "vertices", ordered)
        object.__setattr__(self, "edges", frozenset(self.edges))

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Edge]) -> Graph:
        """Build a graph, normalising edge orientation and collapsing parallel edges"""
        normalised = set()
        for u, v in edges:
            if u == v:
                raise InvalidGraphError(ERROR_MESSAGES["SELF_LOOP"].format(vertex=u))
            normalised.add((u, v) if u < v else (v, u))
        return cls(tuple(vertices), frozenset(normalised))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Convert a networkx graph, relabelling its nodes to 0..n-1 in node order"""
        index = {node: position for position, node in enumerate(graph.nodes)}
        return cls.from_edges(range(len(index)), ((index[u], index[v]) for u, v in graph.edges))

    @classmethod
    def empty(cls) -> Graph:
        return cls()

    # Basic measures

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.vertex_set

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_set(self) -> VertexSet:
        return frozenset(self.vertices)

    @cached_property
    def adjacency(self) -> Mapping[int, VertexSet]:
        neighbours: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return MappingProxyType({v: frozenset(ns) for v, ns in neighbours.items()})

    @cached_property
    def nx_view(self) -> nx.Graph:
        """Frozen networkx view, shared by every caller"""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(sorted(self.edges))
        return nx.freeze(graph)

    def neighbors(self, vertex: int) -> VertexSet:
        return self.adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self.adjacency[vertex])

    @property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adjacency.values()), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(ns) for ns in self.adjacency.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, frozenset())

    @cached_property
    def isolated(self) -> VertexSet:
        return frozenset(v for v, ns in self.adjacency.items() if not ns)

    def neighborhood(self, vertices: Iterable[int]) -> VertexSet:
        """Open neighbourhood N(S): neighbours of S outside S"""
        members = frozenset(vertices)
        found: set[int] = set()
        for vertex in members:
            found |= self.adjacency[vertex]
        return frozenset(found - members)

    # Derived graphs (no validation, see GraphService for the checked versions)

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = frozenset(vertices)
        return Graph(
            tuple(v for v in self.vertices if v in keep),
            frozenset((u, v) for u, v in self.edges if u in keep and v in keep),
        )

    def without(self, vertices: Iterable[int]) -> Graph:
        drop = frozenset(vertices)
        return self.induced(v for v in self.vertices if v not in drop)

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={self.edge_list()})"
