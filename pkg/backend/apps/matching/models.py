from dataclasses import dataclass

from apps.graphs.models import VertexSet


@dataclass(frozen=True)
class TBPartition:
    """
    Tutte-Berge style partition (U, R, S) of V(G).

    Components of G[R] are odd with at least 3 vertices, S is independent
    with N(S) inside U, and |U| + (|R| - odd(G[R])) / 2 bounds the matching
    number.
    """

    u: VertexSet
    r: VertexSet
    s: VertexSet

    def as_lists(self) -> dict[str, list[int]]:
        return {"U": sorted(self.u), "R": sorted(self.r), "S": sorted(self.s)}
