"""
Report Service - Structural summary of a graph, optionally with family constants
"""
import logging

from apps.family.models import Family
from apps.graphs.models import Graph
from apps.graphs.services import GraphService
from apps.matching.services import MatchingService
from apps.shared.caps import get_cap
from apps.shared.exceptions import CapExceededError
from apps.shared.messages.warning import WARNING_MESSAGES
from apps.structure.services import FvsService, StructureService, TreewidthService

logger = logging.getLogger(__name__)


class ReportService:
    @staticmethod
    def analyze(graph: Graph | None, family: Family | None = None) -> dict:
        """
        Summary of the graph, the family constants, or both.

        Family constants are top-level keys of a family-only report and sit
        under "family" next to a graph report, whose m is the edge count.
        Vertex ids are 1-based as in the graph file; quantities above their
        caps are reported as null.
        """
        if graph is None:
            return family.constants()

        decomposition = StructureService.block_decomposition(graph)
        report = {
            "n": graph.n,
            "m": graph.m,
            "components": len(GraphService.connected_components(graph)),
            "cut_vertices": sorted(vertex + 1 for vertex in decomposition.cut_vertices),
            "blocks": len(decomposition.blocks),
            "slb": StructureService.slb(graph) if graph.m else None,
            "matching_number": MatchingService.matching_number(graph),
            "fvs_size": None,
            "treewidth": None,
        }
        if graph.n <= get_cap("fvs"):
            report["fvs_size"] = len(FvsService.fvs_exact(graph))
        else:
            logger.warning(WARNING_MESSAGES["VERIFY_SKIPPED"].format(check="fvs_size", reason="graph above the fvs cap"))
        try:
            report["treewidth"] = TreewidthService.treewidth_exact(graph)
        except CapExceededError as exc:
            logger.warning(WARNING_MESSAGES["VERIFY_SKIPPED"].format(check="treewidth", reason=exc.message))

        if family is not None:
            report["family"] = family.constants()
        return report
