from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from apps.family.models import Family
from apps.graphs.models import Graph, VertexSet
from apps.minors.models import ContainmentType
from apps.shared.exceptions import PreconditionError
from apps.shared.messages.error import ERROR_MESSAGES
from apps.vc_oracle.models import QueryRecord


class Engine(str, Enum):
    AUTO = "auto"
    TURING = "turing"
    BRUTE = "brute"

    @classmethod
    def parse(cls, value: str | Engine) -> Engine:
        try:
            return cls(value)
        except ValueError:
            raise PreconditionError(ERROR_MESSAGES["UNKNOWN_ENGINE"].format(value=value))


@dataclass(frozen=True)
class DeletionInstance:
    """Is there X with |X| <= budget such that G - X contains no member of F as a type?"""

    graph: Graph
    budget: int
    containment: ContainmentType
    family: Family

    def __post_init__(self):
        if self.budget < 0:
            raise PreconditionError(ERROR_MESSAGES["NEGATIVE_BUDGET"].format(budget=self.budget))
        if self.budget > self.graph.n:
            raise PreconditionError(
                ERROR_MESSAGES["BUDGET_OUT_OF_RANGE"].format(budget=self.budget, n=self.graph.n)
            )
        object.__setattr__(self, "containment", ContainmentType.parse(self.containment))


@dataclass(frozen=True)
class TypeFunction:
    """
    f: subsets Y of U -> independent vertex sets of Q.

    Every vertex of f(Y) has exactly Y as its neighbourhood in U; the
    union of all images is independent; |f(Y)| <= alpha. Subsets Y that
    are not keys map to the empty set.
    """

    assignment: Mapping[VertexSet, VertexSet]

    @property
    def image(self) -> VertexSet:
        """f(2^U)"""
        return frozenset().union(*self.assignment.values())

    def size_of(self, y: VertexSet) -> int:
        return len(self.assignment.get(y, frozenset()))

    def as_lists(self) -> list[dict[str, list[int]]]:
        return [
            {"Y": sorted(y), "f": sorted(chosen)}
            for y, chosen in sorted(self.assignment.items(), key=lambda item: sorted(item[0]))
            if chosen
        ]


@dataclass(frozen=True)
class SolveResult:
    """Decision plus how it was reached"""

    answer: bool
    engine: str
    witness: VertexSet | None = None
    queries: tuple[QueryRecord, ...] = field(default=(), compare=False)
