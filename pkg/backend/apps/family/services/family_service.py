"""
Family Service - Forbidden-family preprocessing and derived constants
"""
import logging
from typing import Iterable, Sequence

from ..models import Family, ReductionTarget
from apps.graphs.models import Graph
from apps.graphs.services import GraphCatalog, GraphService
from apps.minors.services import MinorService, SubgraphService
from apps.shared.exceptions import LowerBoundRegimeError, PreconditionError
from apps.shared.messages.error import ERROR_MESSAGES
from apps.shared.messages.warning import WARNING_MESSAGES
from apps.structure.services import StructureService, TreewidthService

logger = logging.getLogger(__name__)

# Constants
P3 = GraphCatalog.path(3)


class FamilyService:
    """Builds Family objects and answers the questions the solvers ask about F"""

    @staticmethod
    def build_family(members: Sequence[Graph], names: Sequence[str] | None = None) -> Family:
        """
        Compute every derived constant once.

        Args:
            members: Forbidden graphs, in input order
            names: Member names, defaults to F1, F2, ...

        Returns:
            Immutable Family

        Raises:
            PreconditionError: no members
            CapExceededError: member too large for exact treewidth
        """
        if not members:
            raise PreconditionError(ERROR_MESSAGES["EMPTY_FAMILY"])
        names = tuple(names) if names else tuple(f"F{index}" for index in range(1, len(members) + 1))

        stripped = tuple(FamilyService.strip_isolated(members))
        for name, member in zip(names, stripped):
            if member.n == 0:
                logger.warning(WARNING_MESSAGES["EMPTY_MEMBER"].format(name=name))

        treewidths = tuple(TreewidthService.treewidth_exact(member) for member in members)
        found = FamilyService.p3_free_witness(stripped)
        witness, m = found if found is not None else (None, None)
        alpha = FamilyService.compute_alpha(stripped, m) if m is not None else None

        family = Family(
            names=names,
            members=tuple(members),
            stripped=stripped,
            treewidths=treewidths,
            witness=witness,
            m=m,
            alpha=alpha,
            mintw=min(treewidths),
            guard_bound=FamilyService.guard_bound(members),
        )
        logger.info(f"Family {list(names)} loaded: m={m}, alpha={alpha}, mintw={family.mintw}")
        return family

    @staticmethod
    def strip_isolated(family: Iterable[Graph]) -> list[Graph]:
        """F' = {F - isolated(F)}; members that become empty stay in the list"""
        return [member.without(member.isolated) for member in family]

    @staticmethod
    def p3_free_witness(stripped: Sequence[Graph]) -> tuple[Graph, int] | None:
        """
        Smallest P3-subgraph-free nonempty member of F'.

        Ties: fewest edges, then fewest vertices, then input order.

        Returns:
            (M, |E(M)| - 1) or None in the lower-bound regime
        """
        candidates = [
            (member.m, member.n, index)
            for index, member in enumerate(stripped)
            if member.n > 0 and SubgraphService.contains_subgraph(member, P3) is None
        ]
        if not candidates:
            return None
        _, _, index = min(candidates)
        witness = stripped[index]
        return witness, witness.m - 1

    @staticmethod
    def compute_alpha(stripped: Sequence[Graph], m: int) -> int:
        """alpha = max over H in F' of |V(H)| + 3m(Delta(H) + 1)"""
        if m < 0:
            raise PreconditionError(ERROR_MESSAGES["NEGATIVE_MATCHING_BOUND"].format(m=m))
        if not stripped:
            raise PreconditionError(ERROR_MESSAGES["EMPTY_ALPHA_FAMILY"])
        return max(member.n + 3 * m * (member.max_degree + 1) for member in stripped)

    @staticmethod
    def mintw(family: Iterable[Graph]) -> int:
        return min(TreewidthService.treewidth_exact(member) for member in family)

    @staticmethod
    def guard_bound(family: Iterable[Graph]) -> int:
        """max over F of |V(F)| + 2|V(F)|^3"""
        return max(member.n + 2 * member.n ** 3 for member in family)

    @staticmethod
    def select_reduction_target(family: Family) -> ReductionTarget:
        """
        Pick (H, H_up, c) for the family-level reduction.

        F_down holds the componentwise-minor-minimal members of treewidth
        mintw(F); H_up is a minor-maximal component of an F_down member with
        the smallest leaf-block, first in member then component order.

        Raises:
            LowerBoundRegimeError: some member has no component on 3+ vertices
        """
        for name, member in zip(family.names, family.members):
            if all(len(component) < 3 for component in GraphService.connected_components(member)):
                raise LowerBoundRegimeError(ERROR_MESSAGES["REDUCTION_REGIME"].format(name=name))

        members = family.members
        lowest = [
            index for index, width in enumerate(family.treewidths) if width == family.mintw
        ]
        minimal = [
            index for index in lowest
            if all(
                not MinorService.componentwise_minor(other, members[index])
                or MinorService.componentwise_minor(members[index], other)
                for other in members
            )
        ]

        best: tuple[int, int, Graph] | None = None
        for index in minimal:
            components = GraphService.component_graphs(members[index])
            for component in components:
                maximal = all(
                    MinorService.contains_minor(other, component) is None
                    or MinorService.contains_minor(component, other) is not None
                    for other in components
                )
                if not maximal:
                    continue
                leaf = StructureService.slb(component)
                if best is None or leaf < best[0]:
                    best = (leaf, index, component)

        _, index, component = best
        host = members[index]
        copies = sum(
            1 for other in GraphService.component_graphs(host)
            if GraphService.are_isomorphic(other, component)
        )
        logger.info(
            f"Reduction target: member {family.names[index]}, component n={component.n}, "
            f"slb={best[0]}, copies={copies}"
        )
        return ReductionTarget(host=host, component=component, copies=copies)
