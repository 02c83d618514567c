"""
Test helpers: graph corpora, hypothesis strategies and brute-force oracles.

The oracles only use networkx primitives and exhaustive enumeration so the
services can be checked against something independent of their own code.
"""
import os
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
from hypothesis import strategies as st

from apps.graphs.models import Graph

# Set FDEL_FULL_ACCEPTANCE=1 to run the exhaustive sweeps at full size
FULL_ACCEPTANCE = os.getenv("FDEL_FULL_ACCEPTANCE", "0") == "1"


# Corpora

@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    return tuple(Graph.from_networkx(g) for g in nx.graph_atlas_g())


def atlas_graphs(max_vertices: int, min_vertices: int = 0, connected: bool | None = None) -> list[Graph]:
    """All graphs on min..max vertices up to isomorphism (max_vertices <= 7)"""
    chosen = []
    for graph in _atlas():
        if not min_vertices <= graph.n <= max_vertices:
            continue
        if connected is not None and graph.n and nx.is_connected(graph.nx_view) != connected:
            continue
        chosen.append(graph)
    return chosen


def sample(graphs: list[Graph], every: int) -> list[Graph]:
    """Every every-th graph, first one included"""
    return graphs[::every]


def random_graphs(count: int, n: int, p: float = 0.35) -> list[Graph]:
    """count seeded G(n, p) samples, reproducible across runs"""
    return [Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed)) for seed in range(count)]


def union(*graphs: Graph) -> Graph:
    combined = nx.disjoint_union_all([g.nx_view for g in graphs]) if graphs else nx.Graph()
    return Graph.from_networkx(combined)


def copies(graph: Graph, count: int) -> Graph:
    return union(*([graph] * count))


def K(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def P(n: int) -> Graph:
    """Path on n vertices"""
    return Graph.from_networkx(nx.path_graph(n))


def C(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def star(leaves: int) -> Graph:
    return Graph.from_networkx(nx.star_graph(leaves))


def edgeless(n: int) -> Graph:
    return Graph.from_edges(range(n), ())


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def graph_text(graph: Graph) -> str:
    """Graph file text, written without the services under test"""
    lines = [f"p edge {graph.n} {graph.m}"]
    position = {v: i + 1 for i, v in enumerate(graph.vertices)}
    lines.extend(f"e {position[u]} {position[v]}" for u, v in sorted(graph.edges))
    return "\n".join(lines) + "\n"


def family_text(members: dict[str, Graph]) -> str:
    return "".join(f"g {name}\n{graph_text(graph)}" for name, graph in members.items())


# Strategies

@st.composite
def graphs(draw, min_vertices: int = 0, max_vertices: int = 7, connected: bool = False) -> Graph:
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = [pair for pair in pairs if draw(st.booleans())]
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(chosen)
    if connected and n > 1:
        # chain the components together
        components = [min(c) for c in nx.connected_components(graph)]
        graph.add_edges_from(zip(components, components[1:]))
    return Graph.from_networkx(graph)


@st.composite
def minor_pairs(draw, max_vertices: int = 7, max_steps: int = 3) -> tuple[Graph, Graph]:
    """(G, H) where H comes from G by vertex deletions, edge deletions and contractions"""
    graph = draw(graphs(max_vertices=max_vertices))
    minor = graph.nx_view.copy()
    for _ in range(draw(st.integers(min_value=0, max_value=max_steps))):
        if not minor.number_of_nodes():
            break
        step = draw(st.sampled_from(["vertex", "edge", "contract"]))
        if step == "vertex" or not minor.number_of_edges():
            minor.remove_node(draw(st.sampled_from(sorted(minor.nodes))))
            continue
        u, v = draw(st.sampled_from(sorted(tuple(sorted(e)) for e in minor.edges)))
        if step == "edge":
            minor.remove_edge(u, v)
        else:
            minor = nx.contracted_edge(minor, (u, v), self_loops=False)
    return graph, Graph.from_edges(minor.nodes, minor.edges)


# Oracles

def brute_matching_number(graph: Graph) -> int:
    def best(vertices: frozenset[int]) -> int:
        if not vertices:
            return 0
        first = min(vertices)
        rest = vertices - {first}
        value = best(rest)
        for other in graph.neighbors(first) & rest:
            value = max(value, 1 + best(rest - {other}))
        return value

    return best(graph.vertex_set)


def brute_vertex_cover_number(graph: Graph) -> int:
    for size in range(graph.n + 1):
        for chosen in combinations(graph.vertices, size):
            picked = set(chosen)
            if all(u in picked or v in picked for u, v in graph.edges):
                return size
    return graph.n


def brute_fvs_number(graph: Graph) -> int:
    for size in range(graph.n + 1):
        for chosen in combinations(graph.vertices, size):
            rest = graph.nx_view.copy()
            rest.remove_nodes_from(chosen)
            if rest.number_of_nodes() == 0 or nx.is_forest(rest):
                return size
    return graph.n


def brute_treewidth(graph: Graph) -> int:
    """Minimum over all elimination orderings (n <= 7)"""
    if graph.n == 0:
        return -1
    best = graph.n - 1
    for order in permutations(graph.vertices):
        adjacency = {v: set(graph.neighbors(v)) for v in graph.vertices}
        width = 0
        for vertex in order:
            neighbours = adjacency.pop(vertex)
            width = max(width, len(neighbours))
            if width >= best:
                break
            for u in neighbours:
                adjacency[u] |= neighbours - {u}
                adjacency[u].discard(vertex)
        best = min(best, width)
    return best


def brute_isomorphic(first: Graph, second: Graph) -> bool:
    if (first.n, first.m) != (second.n, second.m):
        return False
    targets = second.edges
    for image in permutations(second.vertices):
        mapping = dict(zip(first.vertices, image))
        if all((min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) in targets for u, v in first.edges):
            return True
    return False


def brute_has_subgraph(graph: Graph, pattern: Graph) -> bool:
    if pattern.n > graph.n:
        return False
    for image in permutations(graph.vertices, pattern.n):
        mapping = dict(zip(pattern.vertices, image))
        if all(graph.has_edge(mapping[u], mapping[v]) for u, v in pattern.edges):
            return True
    return False


def brute_has_minor(graph: Graph, pattern: Graph) -> bool:
    """
    H is a minor of G iff some contraction of G contains H as a subgraph;
    explores all edge contractions with a visited set.
    """
    seen: set[tuple] = set()

    def explore(vertices: frozenset[int], edges: frozenset[tuple[int, int]]) -> bool:
        key = (vertices, edges)
        if key in seen or len(vertices) < pattern.n or len(edges) < pattern.m:
            return False
        seen.add(key)
        if brute_has_subgraph(Graph(tuple(vertices), edges), pattern):
            return True
        for u, v in edges:
            merged = frozenset(
                (min(a, b), max(a, b))
                for a, b in ((u if x == v else x, u if y == v else y) for x, y in edges)
                if a != b
            )
            if explore(vertices - {v}, merged):
                return True
        return False

    return explore(graph.vertex_set, graph.edges)


def brute_is_robust(graph: Graph, alpha: int) -> bool:
    if graph.n < alpha:
        return False
    for vertex in graph.vertices:
        rest = graph.nx_view.copy()
        rest.remove_node(vertex)
        if any(len(c) < alpha - 1 for c in nx.connected_components(rest)):
            return False
    return True


def brute_alpha_prune(graph: Graph, alpha: int) -> frozenset[int]:
    """Union of the vertex sets of all alpha-robust induced subgraphs"""
    kept: set[int] = set()
    for size in range(alpha, graph.n + 1):
        for chosen in combinations(graph.vertices, size):
            if brute_is_robust(graph.induced(chosen), alpha):
                kept |= set(chosen)
    return frozenset(kept)


def brute_deletion_number(graph: Graph, family: list[Graph], minor: bool = True) -> int:
    """Smallest |X| such that G - X contains no member (minor or subgraph)"""
    contains = brute_has_minor if minor else brute_has_subgraph
    for size in range(graph.n + 1):
        for chosen in combinations(graph.vertices, size):
            rest = graph.without(chosen)
            if not any(contains(rest, member) for member in family):
                return size
    return graph.n + 1
