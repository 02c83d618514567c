from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from apps.graphs.models import Graph


@dataclass(frozen=True)
class Family:
    """
    Finite forbidden family F with its derived constants.

    stripped is F' (members without isolated vertices). witness is M, the
    smallest P3-subgraph-free member of F', and m = |E(M)| - 1; both are
    None in the lower-bound regime, and alpha with them.
    """

    names: tuple[str, ...]
    members: tuple[Graph, ...]
    stripped: tuple[Graph, ...]
    treewidths: tuple[int, ...]
    witness: Graph | None
    m: int | None
    alpha: int | None
    mintw: int
    guard_bound: int

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def has_isolated_members(self) -> bool:
        """F differs from F'"""
        return any(member.isolated for member in self.members)

    @property
    def has_empty_member(self) -> bool:
        return any(member.n == 0 for member in self.stripped)

    @property
    def max_member_order(self) -> int:
        return max(member.n for member in self.members)

    @property
    def in_lower_bound_regime(self) -> bool:
        return self.witness is None and not self.has_empty_member

    def constants(self) -> dict:
        return {
            "members": list(self.names),
            "stripped_orders": [member.n for member in self.stripped],
            "witness_edges": None if self.witness is None else self.witness.m,
            "m": self.m,
            "alpha": self.alpha,
            "mintw": self.mintw,
            "guard_bound": self.guard_bound,
        }


class ReductionTarget(NamedTuple):
    """(H, H_up, c) picked for the family-level reduction"""

    host: Graph
    component: Graph
    copies: int
