"""
Verification Service - Mechanical checks of gadgets and generated instances
"""
import logging
from typing import Sequence

from ..models import CheckResult, CnfFormula, GadgetLabels, ReductionArtifact, VerificationReport
from .cnf_service import CnfService
from .gadget_service import GadgetService
from .instance_service import InstanceService
from apps.family.models import Family
from apps.graphs.models import Graph, VertexSet
from apps.graphs.services import GraphService
from apps.kernel.services import BruteForceService
from apps.minors.models import ContainmentType
from apps.minors.services import MinorService, SubgraphService
from apps.shared.caps import check_cap, get_cap
from apps.shared.exceptions import CapExceededError
from apps.shared.messages.warning import WARNING_MESSAGES
from apps.structure.services import StructureService, TreewidthService

logger = logging.getLogger(__name__)


class VerificationService:
    """Every check returns a CheckResult; failures are reported, not raised"""

    @staticmethod
    def verify_gadget(pattern: Graph, n: int) -> VerificationReport:
        """
        Check the clause gadget of (H, n) against its four guarantees.

        Raises:
            CapExceededError: H or n above the gadget verification caps
            PreconditionError: invalid pattern or n < 1
        """
        check_cap("gadget_pattern", pattern.n, "Gadget verification pattern")
        check_cap("gadget_clause", n, "Gadget verification clause size")
        graph, labels = GadgetService.clause_gadget(pattern, n)
        anchors = GadgetService.gadget_anchors(pattern)
        expected_n = (2 * n - 1) * (2 * pattern.n + len(anchors.leaf) - 2) - 2 * (n - 1)

        checks = [
            CheckResult("modulator_size", len(labels.modulator_set) == n, f"|S|={len(labels.modulator_set)}"),
            CheckResult("vertex_count", graph.n == expected_n, f"|V(G)|={graph.n}, expected {expected_n}"),
            VerificationService._treewidth_check("treewidth", graph, TreewidthService.treewidth_exact(pattern)),
            VerificationService._packing_check(
                "packing", graph, pattern, GadgetService.gadget_packing(labels), 3 * n - 1, frozenset()
            ),
            VerificationService._packing_check(
                "packing_without_modulator",
                graph,
                pattern,
                GadgetService.gadget_packing(labels, avoid_modulator=True),
                3 * n - 2,
                labels.modulator_set,
            ),
        ]
        for j in range(1, n + 1):
            checks.append(VerificationService._solution_check(graph, pattern, labels, j))

        report = VerificationReport(subject=f"gadget(n={n}, |V(H)|={pattern.n})", checks=tuple(checks))
        logger.info(f"Gadget verification {'passed' if report.passed else 'failed'}: {report.failures}")
        return report

    @staticmethod
    def verify_instance(
        artifact: ReductionArtifact,
        formula: CnfFormula,
        family: Family | None,
        containment: ContainmentType = ContainmentType.MINOR,
    ) -> VerificationReport:
        """
        Check a generated instance: l and |S| formulas, the modulator, the
        explicit packing, the solution built from a satisfying assignment and,
        within the verify cap, brute-force soundness.

        Args:
            artifact: Generated instance
            formula: The formula it encodes
            family: F for family-level instances, None for a single connected H
            containment: Relation used by the brute-force soundness check
        """
        containment = ContainmentType.parse(containment)
        graph = artifact.graph
        copies = len(artifact.parts)
        part_ell = formula.k + 3 * formula.n - 2 * formula.m
        members: Sequence[Graph] = family.members if family is not None else (artifact.pattern,)
        width_bound = family.mintw if family is not None else TreewidthService.treewidth_exact(artifact.pattern)

        checks = [
            CheckResult("ell", artifact.ell == copies * part_ell, f"l={artifact.ell}, l'={part_ell}, copies={copies}"),
            CheckResult(
                "modulator_size",
                len(artifact.modulator) == copies * 2 * formula.k,
                f"|S|={len(artifact.modulator)}",
            ),
            VerificationService._treewidth_check("modulator", graph.without(artifact.modulator), width_bound),
            VerificationService._packing_check(
                "packing",
                graph,
                artifact.pattern,
                InstanceService.instance_packing(artifact),
                copies * part_ell,
                frozenset(),
            ),
        ]

        assignment = CnfService.satisfying_assignment(formula)
        if assignment is not None:
            solution = InstanceService.assignment_solution(artifact, formula, assignment)
            free = MinorService.is_type_free(graph.without(solution), members, ContainmentType.MINOR)
            checks.append(CheckResult(
                "assignment_solution",
                len(solution) <= artifact.ell and free,
                f"|X|={len(solution)}, minor-free={free}",
            ))

        if graph.n > get_cap("verify"):
            reason = f"{graph.n} vertices above the verify cap {get_cap('verify')}"
            logger.warning(WARNING_MESSAGES["VERIFY_SKIPPED"].format(check="soundness", reason=reason))
            checks.append(CheckResult("soundness", None, reason))
        else:
            witness = BruteForceService.brute_force_delete(graph, members, containment, artifact.ell)
            satisfiable = assignment is not None
            checks.append(CheckResult(
                "soundness",
                (witness is not None) == satisfiable,
                f"satisfiable={satisfiable}, solution within l={witness is not None}",
            ))

        report = VerificationReport(subject=f"instance(k={formula.k}, m={formula.m}, n={formula.n})", checks=tuple(checks))
        logger.info(f"Instance verification {'passed' if report.passed else 'failed'}: {report.failures}")
        return report

    @staticmethod
    def _treewidth_check(name: str, graph: Graph, bound: int) -> CheckResult:
        try:
            width = TreewidthService.treewidth_exact(graph)
        except CapExceededError as exc:
            logger.warning(WARNING_MESSAGES["VERIFY_SKIPPED"].format(check=name, reason=exc.message))
            return CheckResult(name, None, exc.message)
        return CheckResult(name, width <= bound, f"tw={width}, bound={bound}")

    @staticmethod
    def _packing_check(
        name: str,
        graph: Graph,
        pattern: Graph,
        packing: list[VertexSet],
        target: int,
        avoid: VertexSet,
    ) -> CheckResult:
        """The explicit packing has target disjoint H-subgraphs avoiding the given vertices"""
        used: set[int] = set()
        for vertices in packing:
            if vertices & used or vertices & avoid:
                return CheckResult(name, False, "overlapping sets")
            if SubgraphService.contains_subgraph(graph.induced(vertices), pattern) is None:
                return CheckResult(name, False, f"{sorted(vertices)} holds no H-subgraph")
            used |= vertices
        return CheckResult(name, len(packing) >= target, f"{len(packing)} disjoint copies, need {target}")

    @staticmethod
    def _solution_check(graph: Graph, pattern: Graph, labels: GadgetLabels, j: int) -> CheckResult:
        n = labels.n
        solution = GadgetService.clause_gadget_solution(labels, j)
        rest = graph.without(solution)
        leaf = StructureService.slb(pattern)
        problems = []
        if len(solution) != 3 * n - 1:
            problems.append(f"|X|={len(solution)}")
        if labels.modulator[j - 1] not in solution:
            problems.append("f_j(v) missing")
        if MinorService.contains_minor(rest, pattern) is not None:
            problems.append("H-minor left")
        pruned = StructureService.alpha_prune(rest, leaf)
        if not VerificationService._componentwise_below(pruned, pattern):
            problems.append("pruned remainder not below H")
        for component in GraphService.connected_components(rest):
            hits = component & labels.modulator_set
            if hits and (len(component) >= leaf or len(hits) != 1):
                problems.append(f"component {sorted(component)} around S")
        return CheckResult(f"solution_{j}", not problems, "; ".join(problems))

    @staticmethod
    def _componentwise_below(graph: Graph, pattern: Graph) -> bool:
        """Every component of graph is a minor of pattern"""
        return all(
            component.n <= pattern.n and component.m <= pattern.m
            and MinorService.contains_minor(pattern, component) is not None
            for component in GraphService.component_graphs(graph)
        )
