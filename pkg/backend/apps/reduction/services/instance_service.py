"""
Instance Service - CNF-SAT to F-deletion instances and their explicit solutions
"""
import logging
from typing import Mapping

from ..models import CnfFormula, InstanceLabels, ReductionArtifact
from .gadget_service import GadgetService
from apps.family.models import Family
from apps.family.services import FamilyService
from apps.graphs.models import Graph, VertexSet
from apps.graphs.services import GraphService
from apps.shared.exceptions import PreconditionError
from apps.shared.messages.error import ERROR_MESSAGES

logger = logging.getLogger(__name__)


class InstanceService:
    """
    Connected pattern H: k copies of H carry the literal vertices
    v_{x_i}, v_{not x_i}; every clause C_j gets a gadget W_j whose S_j is
    glued onto the literal vertices of C_j in clause order;
    l = k + 3n - 2m and S is the set of literal vertices.

    Family F: the construction for H_up is repeated 2c - 1 times next to
    l + 1 copies of H - Y.
    """

    @staticmethod
    def build_instance_connected(pattern: Graph, formula: CnfFormula) -> ReductionArtifact:
        """
        Args:
            pattern: Connected H on at least 3 vertices
            formula: Nonempty formula without empty clauses

        Returns:
            ReductionArtifact with one part

        Raises:
            PreconditionError: invalid pattern or formula
        """
        GadgetService.gadget_anchors(pattern)
        if not formula.clauses:
            raise PreconditionError(ERROR_MESSAGES["NO_CLAUSES"])

        gadgets = [GadgetService.clause_gadget(pattern, len(clause)) for clause in formula.clauses]
        union, maps = GraphService.disjoint_union(
            [pattern] * formula.k + [gadget for gadget, _ in gadgets]
        )
        first, second = pattern.vertices[0], pattern.vertices[1]
        variables = [(maps[i][first], maps[i][second]) for i in range(formula.k)]
        clause_labels = [
            labels.relabel(maps[formula.k + j]) for j, (_, labels) in enumerate(gadgets)
        ]
        literal_of = {}
        for index, (positive, negative) in enumerate(variables, start=1):
            literal_of[index], literal_of[-index] = positive, negative

        graph = union
        current = {vertex: vertex for vertex in union.vertices}
        for clause, labels in zip(formula.clauses, clause_labels):
            for literal, gadget_vertex in zip(clause, labels.modulator):
                graph, mapping = GraphService.identify(graph, current[literal_of[literal]], current[gadget_vertex])
                current = {original: mapping[now] for original, now in current.items()}
        graph, dense = GraphService.relabel_dense(graph)
        final = {original: dense[now] for original, now in current.items()}

        part = InstanceLabels(
            variables=tuple(variables),
            clauses=tuple(clause_labels),
            variable_copies=tuple(frozenset(maps[i].values()) for i in range(formula.k)),
        ).relabel(final)
        ell = formula.k + 3 * formula.n - 2 * formula.m
        logger.info(
            f"Connected reduction: k={formula.k}, m={formula.m}, n={formula.n} -> "
            f"|V(G)|={graph.n}, l={ell}"
        )
        return ReductionArtifact(
            graph=graph,
            ell=ell,
            modulator=part.modulator,
            pattern=pattern,
            parts=(part,),
        )

    @staticmethod
    def build_instance_family(family: Family, formula: CnfFormula) -> ReductionArtifact:
        """
        G = G2 ⊎ G1 with G1 = (2c - 1)·G', l = (2c - 1)·l' and
        G2 = (l + 1)·(H - Y).

        Raises:
            LowerBoundRegimeError: some member has no component on 3+ vertices
        """
        target = FamilyService.select_reduction_target(family)
        inner = InstanceService.build_instance_connected(target.component, formula)
        repeats = 2 * target.copies - 1
        ell = repeats * inner.ell

        leftover = InstanceService._without_copies(target.host, target.component)
        pieces = [leftover] * (ell + 1) + [inner.graph] * repeats
        graph, maps = GraphService.disjoint_union(pieces)
        filler = frozenset(
            vertex for mapping in maps[: ell + 1] for vertex in mapping.values()
        )
        parts = tuple(inner.parts[0].relabel(mapping) for mapping in maps[ell + 1:])
        modulator = frozenset().union(*(part.modulator for part in parts))
        logger.info(f"Family reduction: c={target.copies}, l={ell}, |V(G)|={graph.n}, |S|={len(modulator)}")
        return ReductionArtifact(
            graph=graph,
            ell=ell,
            modulator=modulator,
            pattern=target.component,
            parts=parts,
            filler=filler,
        )

    @staticmethod
    def assignment_solution(artifact: ReductionArtifact, formula: CnfFormula, assignment: Mapping[int, bool]) -> VertexSet:
        """
        X' (vertices of true literals) plus, for every clause, the gadget
        solution at the position of its first true literal; repeated in
        every copy of the construction.

        Raises:
            PreconditionError: the assignment does not satisfy the formula
        """
        if not formula.evaluate(assignment):
            raise PreconditionError(ERROR_MESSAGES["ASSIGNMENT_NOT_SATISFYING"])
        chosen: set[int] = set()
        for part in artifact.parts:
            for variable in range(1, formula.k + 1):
                chosen.add(part.literal_vertex(variable if assignment[variable] else -variable))
            for clause, labels in zip(formula.clauses, part.clauses):
                position = next(
                    index for index, literal in enumerate(clause, start=1)
                    if assignment[abs(literal)] == (literal > 0)
                )
                chosen |= GadgetService.clause_gadget_solution(labels, position)
        return frozenset(chosen)

    @staticmethod
    def instance_packing(artifact: ReductionArtifact) -> list[VertexSet]:
        """
        l vertex-disjoint copies of the pattern: every variable copy plus the
        packing of each W_j - S_j, in every copy of the construction.
        """
        packing: list[VertexSet] = []
        for part in artifact.parts:
            packing.extend(part.variable_copies)
            for labels in part.clauses:
                packing.extend(GadgetService.gadget_packing(labels, avoid_modulator=True))
        return packing

    @staticmethod
    def metadata(artifact: ReductionArtifact, family_file: str | None, containment: str) -> dict:
        """
        Metadata document. Vertex ids are the 1-based ids of the written
        graph file.
        """
        shift = {vertex: vertex + 1 for vertex in artifact.graph.vertices}
        shifted = ReductionArtifact(
            graph=artifact.graph,
            ell=artifact.ell,
            modulator=frozenset(shift[x] for x in artifact.modulator),
            pattern=artifact.pattern,
            parts=tuple(part.relabel(shift) for part in artifact.parts),
            filler=frozenset(shift[x] for x in artifact.filler),
        )
        return {
            "ell": artifact.ell,
            "modulator": sorted(shifted.modulator),
            "family_file": family_file,
            "type": containment,
            "n": artifact.graph.n,
            "m": artifact.graph.m,
            "labels": shifted.labels_dict(),
        }

    @staticmethod
    def _without_copies(host: Graph, component: Graph) -> Graph:
        """H - Y: H without the components isomorphic to H_up"""
        kept = [
            part for part in GraphService.component_graphs(host)
            if not GraphService.are_isomorphic(part, component)
        ]
        if not kept:
            return Graph.empty()
        graph, _ = GraphService.disjoint_union(kept)
        return graph
