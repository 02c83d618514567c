"""
Kernel Service - Turing kernel for F-type deletion through vertex cover queries
"""
import json
import logging
from concurrent.futures import FIRST_COMPLETED, ThreadPoolExecutor, wait
from itertools import combinations, islice
from typing import Iterator

from django.conf import settings

from ..models import DeletionInstance, Engine, SolveResult, TypeFunction
from .brute_force_service import BruteForceService
from apps.family.models import Family
from apps.graphs.models import Graph, VertexSet
from apps.graphs.services import GraphService
from apps.minors.models import ContainmentType
from apps.minors.services import MinorService
from apps.shared.caps import get_cap
from apps.shared.exceptions import InvariantViolation, LowerBoundRegimeError, PreconditionError
from apps.shared.messages.error import ERROR_MESSAGES
from apps.shared.messages.warning import WARNING_MESSAGES
from apps.vc_oracle.services import QueryLog, VcService

logger = logging.getLogger(__name__)

# Pending (U, R) evaluations per worker thread
PARALLEL_WINDOW = 4


class KernelService:
    """
    Decision pipeline:

    1. small-instance guard (brute force) when F has members with isolated
       vertices and |V(G)| - l <= guard_bound
    2. F is replaced by F' (isolated vertices stripped); an empty member of
       F' makes every instance NO
    3. without a P3-subgraph-free member of F' the kernel does not apply
    4. enumeration of (U, R, f) with one vertex cover query each
    """

    @staticmethod
    def solve(
        instance: DeletionInstance,
        engine: str | Engine = Engine.AUTO,
        query_log: QueryLog | None = None,
        threads: int | None = None,
        debug: bool | None = None,
    ) -> SolveResult:
        """
        Decide the instance exactly.

        Args:
            instance: Graph, budget, containment type and family
            engine: auto (kernel when applicable), turing or brute
            query_log: Receives every oracle query
            threads: Worker threads for the (U, R) enumeration
            debug: Assemble and check the deletion set of an accepting iteration

        Returns:
            SolveResult

        Raises:
            LowerBoundRegimeError: engine turing on a family without a P3-free member
        """
        engine = Engine.parse(engine)
        family = instance.family
        graph, budget, containment = instance.graph, instance.budget, instance.containment
        debug = settings.DEBUG if debug is None else debug
        threads = threads or settings.FDEL_THREADS
        log = query_log if query_log is not None else QueryLog()

        if engine == Engine.BRUTE:
            return KernelService._brute(graph, family.members, containment, budget, "brute")

        if engine == Engine.TURING and family.in_lower_bound_regime:
            raise LowerBoundRegimeError(ERROR_MESSAGES["LOWER_BOUND_REGIME"])

        if family.has_isolated_members and graph.n - budget <= family.guard_bound:
            logger.info(f"n - l = {graph.n - budget} <= guard bound {family.guard_bound}: brute force")
            return KernelService._brute(graph, family.members, containment, budget, "guard")

        if family.has_empty_member:
            return SolveResult(answer=False, engine="trivial")

        if family.witness is None:
            logger.warning(WARNING_MESSAGES["TURING_FALLBACK"])
            return KernelService._brute(graph, family.stripped, containment, budget, "brute")

        search = _TuringSearch(graph, budget, family, containment, log, debug)
        pairs = KernelService.candidate_pairs(graph, family.m)
        if threads > 1:
            accepted, witness = search.run_parallel(pairs, threads)
        else:
            accepted, witness = search.run(pairs)
        logger.info(f"Turing kernel: {len(log)} queries, answer {'YES' if accepted else 'NO'}")
        return SolveResult(answer=accepted, engine="turing", witness=witness, queries=log.records)

    @staticmethod
    def candidate_pairs(graph: Graph, m: int) -> Iterator[tuple[VertexSet, VertexSet]]:
        """All (U, R) with |U| <= m and R a union of odd components within the matching bound"""
        for size in range(min(m, graph.n) + 1):
            for hub in combinations(graph.vertices, size):
                hub_set = frozenset(hub)
                for odd_set in KernelService.candidate_odd_sets(graph, hub_set, m):
                    yield hub_set, odd_set

    @staticmethod
    def candidate_odd_sets(graph: Graph, hub: VertexSet, m: int) -> Iterator[VertexSet]:
        """
        R outside U with every component of G[R] odd of size >= 3 and
        |U| + (|R| - odd(G[R])) / 2 <= m; such R have at most 3(m - |U|) vertices.
        """
        yield frozenset()
        rest = [v for v in graph.vertices if v not in hub]
        limit = min(3 * (m - len(hub)), len(rest))
        for size in range(3, limit + 1):
            for chosen in combinations(rest, size):
                components = GraphService.connected_components(graph.induced(chosen))
                if any(len(component) < 3 or len(component) % 2 == 0 for component in components):
                    continue
                if 2 * len(hub) + size - len(components) <= 2 * m:
                    yield frozenset(chosen)

    @staticmethod
    def compute_q(graph: Graph, hub: VertexSet, odd_set: VertexSet) -> VertexSet:
        """Q = V(G) minus (U, R and N(R))"""
        if hub & odd_set or not (hub | odd_set) <= graph.vertex_set:
            raise PreconditionError(ERROR_MESSAGES["DISJOINT_SETS"])
        return graph.vertex_set - hub - odd_set - graph.neighborhood(odd_set)

    @staticmethod
    def compute_q_prime(
        graph: Graph, hub: VertexSet, q: VertexSet, function: TypeFunction, alpha: int
    ) -> VertexSet:
        """Q' = vertices v of Q outside f(2^U) with |f(N(v) ∩ U)| < alpha"""
        image = function.image
        return frozenset(
            v for v in q - image
            if function.size_of(graph.neighbors(v) & hub) < alpha
        )

    @staticmethod
    def _brute(
        graph: Graph, members, containment: ContainmentType, budget: int, engine: str
    ) -> SolveResult:
        witness = BruteForceService.brute_force_delete(graph, members, containment, budget)
        return SolveResult(answer=witness is not None, engine=engine, witness=witness)


class _TuringSearch:
    """One evaluation per (U, R); every valid f issues one oracle query"""

    def __init__(
        self,
        graph: Graph,
        budget: int,
        family: Family,
        containment: ContainmentType,
        log: QueryLog,
        debug: bool,
    ):
        self.graph = graph
        self.budget = budget
        self.forbidden = family.stripped
        self.alpha = family.alpha
        self.containment = containment
        self.log = log
        self.debug = debug

    def run(self, pairs) -> tuple[bool, VertexSet | None]:
        for hub, odd_set in pairs:
            accepted, witness = self.evaluate(hub, odd_set)
            if accepted:
                return True, witness
        return False, None

    def run_parallel(self, pairs, threads: int) -> tuple[bool, VertexSet | None]:
        """At most PARALLEL_WINDOW pairs per thread are in flight; the first YES cancels the rest"""
        pairs = iter(pairs)
        with ThreadPoolExecutor(max_workers=threads) as executor:
            pending = {
                executor.submit(self.evaluate, hub, odd_set)
                for hub, odd_set in islice(pairs, PARALLEL_WINDOW * threads)
            }
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for future in done:
                    accepted, witness = future.result()
                    if accepted:
                        for other in pending:
                            other.cancel()
                        return True, witness
                pending |= {
                    executor.submit(self.evaluate, hub, odd_set)
                    for hub, odd_set in islice(pairs, len(done))
                }
        return False, None

    def evaluate(self, hub: VertexSet, odd_set: VertexSet) -> tuple[bool, VertexSet | None]:
        graph = self.graph
        q = KernelService.compute_q(graph, hub, odd_set)
        if self.debug and any(graph.neighbors(v) & q for v in odd_set):
            raise InvariantViolation(ERROR_MESSAGES["R_Q_EDGE"].format(u=sorted(hub), r=sorted(odd_set)))

        deleted_outside = graph.neighborhood(odd_set) - hub
        if len(deleted_outside) > self.budget:
            return False, None

        for function in self.type_functions(hub, odd_set, q):
            q_prime = KernelService.compute_q_prime(graph, hub, q, function, self.alpha)
            query_budget = self.budget - len(deleted_outside | q_prime)
            if query_budget < 0:
                continue
            query = graph.induced(q - q_prime)
            answer, record = VcService.vc_oracle(query, query_budget, self.log)
            if not answer:
                continue
            logger.debug(json.dumps({
                "U": sorted(hub),
                "R": sorted(odd_set),
                "f": function.as_lists(),
                "query": record.to_dict(),
            }))
            witness = None
            if self.debug:
                witness = self._assemble(query, query_budget, deleted_outside | q_prime)
            return True, witness
        return False, None

    def type_functions(self, hub: VertexSet, odd_set: VertexSet, q: VertexSet) -> Iterator[TypeFunction]:
        """
        Every valid f whose G[f(2^U) ∪ U ∪ R] is F'-type-free.

        That graph is fixed up to isomorphism by the number of chosen vertices
        per class (class members share their neighbourhood in U and see
        nothing in R), so freeness is memoised on the count vector.
        """
        graph = self.graph
        classes: dict[VertexSet, list[int]] = {}
        for v in sorted(q):
            classes.setdefault(graph.neighbors(v) & hub, []).append(v)
        order = sorted(classes, key=lambda y: (len(y), sorted(y)))
        base = hub | odd_set
        memo: dict[tuple[int, ...], bool] = {}

        def free(picked: frozenset[int], counts: tuple[int, ...]) -> bool:
            if counts not in memo:
                memo[counts] = MinorService.is_type_free(
                    graph.induced(base | picked), self.forbidden, self.containment
                )
            return memo[counts]

        def extend(index: int, picked: frozenset[int], chosen: dict, counts: tuple[int, ...]):
            if index == len(order):
                yield TypeFunction(dict(chosen))
                return
            y = order[index]
            for subset in self._independent_subsets(classes[y], picked):
                grown = picked | subset
                key = counts + (len(subset),)
                if subset and not free(grown, key):
                    continue
                chosen[y] = subset
                yield from extend(index + 1, grown, chosen, key)
                del chosen[y]

        if not free(frozenset(), ()):
            return
        yield from extend(0, frozenset(), {}, ())

    def _independent_subsets(self, candidates: list[int], picked: frozenset[int]) -> Iterator[frozenset[int]]:
        """Independent subsets of at most alpha candidates, none adjacent to picked; largest first"""
        graph = self.graph
        allowed = [v for v in candidates if not graph.neighbors(v) & picked]
        found: list[frozenset[int]] = []

        def grow(start: int, current: frozenset[int]):
            found.append(current)
            if len(current) == self.alpha:
                return
            for position in range(start, len(allowed)):
                vertex = allowed[position]
                if not graph.neighbors(vertex) & current:
                    grow(position + 1, current | {vertex})

        grow(0, frozenset())
        found.sort(key=lambda subset: (-len(subset), sorted(subset)))
        return iter(found)

    def _assemble(self, query: Graph, query_budget: int, deleted: VertexSet) -> VertexSet | None:
        """X = X_vc ∪ (N(R) minus U) ∪ Q', checked against F'"""
        if query.n > get_cap("vc"):
            logger.debug(f"Witness assembly skipped: query has {query.n} vertices")
            return None
        cover = VcService.cover_within_budget(query, query_budget)
        witness = frozenset(cover | deleted)
        if len(witness) > self.budget:
            raise InvariantViolation(
                ERROR_MESSAGES["WITNESS_TOO_LARGE"].format(size=len(witness), budget=self.budget)
            )
        if not MinorService.is_type_free(self.graph.without(witness), self.forbidden, self.containment):
            raise InvariantViolation(ERROR_MESSAGES["WITNESS_INVALID"].format(witness=sorted(witness)))
        return witness
