"""
Minor Service - Minor containment by branch-set search
"""
import logging
from collections import deque
from typing import Iterable, Iterator

import networkx as nx

from ..models import ContainmentType, MinorModel
from .subgraph_service import SubgraphService
from apps.graphs.models import Graph, VertexSet
from apps.graphs.services import GraphService
from apps.shared.caps import check_cap

logger = logging.getLogger(__name__)


class MinorService:
    """Minor models, component-wise minors and F-type freeness"""

    @staticmethod
    def contains_minor(graph: Graph, pattern: Graph) -> MinorModel | None:
        """
        Search for an H-model in G.

        Branch sets are grown as connected vertex sets, pattern vertices in
        breadth-first order, under an increasing bound on the total model
        size. The model found is shrunk to an inclusion-minimal one.

        Args:
            graph: Host graph G
            pattern: Pattern graph H

        Returns:
            Minimal MinorModel or None

        Raises:
            CapExceededError: pattern above the pattern cap
        """
        check_cap("pattern", pattern.n, "Minor pattern")
        if pattern.n == 0:
            return MinorModel({})
        if not MinorService._fits(graph, pattern):
            return None

        host = graph
        if pattern.min_degree >= 2:
            # vertices outside the 2-core never survive in a minimal model
            host = graph.induced(nx.k_core(graph.nx_view, 2).nodes)
            if not MinorService._fits(host, pattern):
                return None

        if len(GraphService.connected_components(pattern)) == 1:
            hosts = [
                host.induced(component)
                for component in GraphService.connected_components(host)
                if MinorService._fits(host.induced(component), pattern)
            ]
        else:
            hosts = [host]

        for candidate in hosts:
            branch_sets = _ModelSearch(candidate, pattern).run()
            if branch_sets is not None:
                return MinorService.minimize_model(graph, pattern, MinorModel(branch_sets))
        return None

    @staticmethod
    def minimize_model(graph: Graph, pattern: Graph, model: MinorModel) -> MinorModel:
        """
        Drop vertices from branch sets, pattern vertices and host vertices
        in ascending order, until no vertex can leave while the result is
        still a model.
        """
        branch_sets = {h: set(branch) for h, branch in model.branch_sets.items()}
        changed = True
        while changed:
            changed = False
            for h in pattern.vertices:
                for vertex in sorted(branch_sets[h]):
                    if len(branch_sets[h]) == 1:
                        break
                    smaller = branch_sets[h] - {vertex}
                    if not MinorService._connected(graph, smaller):
                        continue
                    if all(
                        MinorService._touches(graph, smaller, branch_sets[other])
                        for other in pattern.neighbors(h)
                    ):
                        branch_sets[h] = smaller
                        changed = True
        return MinorModel({h: frozenset(branch) for h, branch in branch_sets.items()})

    @staticmethod
    def is_valid_model(graph: Graph, pattern: Graph, model: MinorModel) -> bool:
        branch_sets = model.branch_sets
        if set(branch_sets) != set(pattern.vertices):
            return False
        seen: set[int] = set()
        for branch in branch_sets.values():
            if not branch or not branch <= graph.vertex_set or branch & seen:
                return False
            if not MinorService._connected(graph, branch):
                return False
            seen |= branch
        return all(MinorService._touches(graph, branch_sets[u], branch_sets[v]) for u, v in pattern.edges)

    @staticmethod
    def componentwise_minor(pattern: Graph, graph: Graph) -> bool:
        """Every connected component of the pattern is a minor of the graph"""
        return all(
            MinorService.contains_minor(graph, component) is not None
            for component in GraphService.component_graphs(pattern)
        )

    @staticmethod
    def contains_type(graph: Graph, pattern: Graph, containment: ContainmentType) -> bool:
        if containment == ContainmentType.SUBGRAPH:
            return SubgraphService.contains_subgraph(graph, pattern) is not None
        return MinorService.contains_minor(graph, pattern) is not None

    @staticmethod
    def is_type_free(graph: Graph, family: Iterable[Graph], containment: ContainmentType) -> bool:
        """
        No member of the family is contained in the graph.

        Args:
            graph: Graph to test
            family: Family instance or any iterable of member graphs
            containment: minor or subgraph
        """
        return not any(MinorService.contains_type(graph, member, containment) for member in family)

    @staticmethod
    def find_occurrence(graph: Graph, pattern: Graph, containment: ContainmentType) -> VertexSet | None:
        """Vertices of one occurrence: a subgraph image or the span of a minimal model"""
        if containment == ContainmentType.SUBGRAPH:
            embedding = SubgraphService.contains_subgraph(graph, pattern)
            return None if embedding is None else frozenset(embedding.values())
        model = MinorService.contains_minor(graph, pattern)
        return None if model is None else model.vertices

    @staticmethod
    def _fits(host: Graph, pattern: Graph) -> bool:
        """Necessary conditions that never get weaker when taking minors"""
        if pattern.n > host.n or pattern.m > host.m:
            return False
        return GraphService.cyclomatic_number(pattern) <= GraphService.cyclomatic_number(host)

    @staticmethod
    def _connected(graph: Graph, vertices: set[int] | VertexSet) -> bool:
        if not vertices:
            return False
        start = next(iter(vertices))
        seen = {start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for neighbour in graph.neighbors(current):
                if neighbour in vertices and neighbour not in seen:
                    seen.add(neighbour)
                    queue.append(neighbour)
        return len(seen) == len(vertices)

    @staticmethod
    def _touches(graph: Graph, first: Iterable[int], second: set[int] | VertexSet) -> bool:
        return any(graph.neighbors(vertex) & second for vertex in first)


class _ModelSearch:
    """
    Backtracking over pattern vertices. Each pattern vertex receives a
    connected set of unused host vertices that touches the branch sets of
    its already placed neighbours.
    """

    def __init__(self, host: Graph, pattern: Graph):
        self.host = host
        self.pattern = pattern
        self.adjacency = host.adjacency
        self.order = self._pattern_order(pattern)
        position = {h: index for index, h in enumerate(self.order)}
        self.placed_neighbours = [
            sorted((j for j in pattern.neighbors(h) if position[j] < index), key=position.get)
            for index, h in enumerate(self.order)
        ]
        self.budget = pattern.n

    def run(self) -> dict[int, VertexSet] | None:
        slack_limit = self.host.n - self.pattern.n
        for slack in self._slack_schedule(slack_limit):
            self.budget = self.pattern.n + slack
            found = self._assign(0, {}, frozenset(), 0)
            if found is not None:
                logger.debug(f"Minor model found with total size bound {self.budget}")
                return found
        return None

    @staticmethod
    def _slack_schedule(limit: int) -> list[int]:
        schedule = [0]
        step = 1
        while schedule[-1] < limit:
            schedule.append(min(limit, step))
            step *= 2
        return schedule

    @staticmethod
    def _pattern_order(pattern: Graph) -> list[int]:
        """Components largest first; breadth-first from a maximum-degree vertex in each"""
        components = sorted(GraphService.connected_components(pattern), key=lambda c: (-len(c), min(c)))
        order: list[int] = []
        for component in components:
            root = min(component, key=lambda v: (-pattern.degree(v), v))
            seen = {root}
            queue = deque([root])
            while queue:
                current = queue.popleft()
                order.append(current)
                for neighbour in sorted(pattern.neighbors(current), key=lambda v: (-pattern.degree(v), v)):
                    if neighbour not in seen:
                        seen.add(neighbour)
                        queue.append(neighbour)
        return order

    def _assign(
        self, index: int, assignment: dict[int, VertexSet], used: frozenset[int], used_count: int
    ) -> dict[int, VertexSet] | None:
        if index == len(self.order):
            return dict(assignment)
        h = self.order[index]
        limit = self.budget - used_count - (len(self.order) - index - 1)
        if limit < 1:
            return None

        available = self.host.vertex_set - used
        contacts = [assignment[j] for j in self.placed_neighbours[index]]
        for branch in self._connected_sets(available, contacts, limit):
            if not all(self._boundary(contact) & branch for contact in contacts):
                continue
            assignment[h] = branch
            now_used = used | branch
            if self._viable(index + 1, assignment, now_used):
                found = self._assign(index + 1, assignment, now_used, used_count + len(branch))
                if found is not None:
                    return found
            del assignment[h]
        return None

    def _boundary(self, branch: VertexSet) -> frozenset[int]:
        found: set[int] = set()
        for vertex in branch:
            found |= self.adjacency[vertex]
        return frozenset(found - branch)

    def _viable(self, index: int, assignment: dict[int, VertexSet], used: frozenset[int]) -> bool:
        """Every unplaced vertex can still reach the branch sets of its placed neighbours"""
        available = self.host.vertex_set - used
        if len(available) < len(self.order) - index:
            return False
        label = self._component_labels(available)
        for later in range(index, len(self.order)):
            reachable: set[int] | None = None
            for j in self.placed_neighbours[later]:
                if j not in assignment:
                    continue
                touching = {label[v] for v in self._boundary(assignment[j]) & available}
                reachable = touching if reachable is None else reachable & touching
                if not reachable:
                    return False
        return True

    def _component_labels(self, available: frozenset[int]) -> dict[int, int]:
        label: dict[int, int] = {}
        for start in available:
            if start in label:
                continue
            label[start] = start
            queue = deque([start])
            while queue:
                current = queue.popleft()
                for neighbour in self.adjacency[current]:
                    if neighbour in available and neighbour not in label:
                        label[neighbour] = start
                        queue.append(neighbour)
        return label

    def _connected_sets(
        self, available: frozenset[int], contacts: list[VertexSet], limit: int
    ) -> Iterator[VertexSet]:
        """
        Connected subsets of available with at most limit vertices meeting the
        seed region (the tightest contact boundary, or everything for a root).
        Each set is produced once, under its smallest seed vertex.
        """
        if contacts:
            region = min((self._boundary(contact) & available for contact in contacts), key=len)
        else:
            region = available
        for seed in sorted(region):
            pool = available - frozenset(v for v in region if v < seed)
            frontier = self.adjacency[seed] & pool
            yield from self._grow(frozenset({seed}), frontier, frozenset(), pool, limit)

    def _grow(
        self,
        current: frozenset[int],
        frontier: frozenset[int],
        excluded: frozenset[int],
        pool: frozenset[int],
        limit: int,
    ) -> Iterator[VertexSet]:
        yield current
        if len(current) >= limit:
            return
        blocked = set(excluded)
        for vertex in sorted(frontier):
            grown = current | {vertex}
            extended = (frontier | (self.adjacency[vertex] & pool)) - grown - blocked
            yield from self._grow(grown, frozenset(extended), frozenset(blocked), pool, limit)
            blocked.add(vertex)
