from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from apps.graphs.models import VertexSet
from apps.shared.exceptions import PreconditionError
from apps.shared.messages.error import ERROR_MESSAGES


class ContainmentType(str, Enum):
    MINOR = "minor"
    SUBGRAPH = "subgraph"

    @classmethod
    def parse(cls, value: str | ContainmentType) -> ContainmentType:
        try:
            return cls(value)
        except ValueError:
            raise PreconditionError(ERROR_MESSAGES["UNKNOWN_CONTAINMENT"].format(value=value))


@dataclass(frozen=True)
class MinorModel:
    """
    Branch sets phi(h) for every pattern vertex h.

    Branch sets are pairwise disjoint, each induces a connected subgraph of
    the host, and every pattern edge is realised by a host edge between the
    corresponding branch sets.
    """

    branch_sets: Mapping[int, VertexSet]

    @property
    def vertices(self) -> VertexSet:
        """phi(H): union of all branch sets"""
        return frozenset().union(*self.branch_sets.values())

    @property
    def size(self) -> int:
        return sum(len(branch) for branch in self.branch_sets.values())

    def as_lists(self) -> dict[int, list[int]]:
        return {h: sorted(branch) for h, branch in sorted(self.branch_sets.items())}
