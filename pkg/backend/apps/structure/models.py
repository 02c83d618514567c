from dataclasses import dataclass

from apps.graphs.models import VertexSet


@dataclass(frozen=True)
class BlockDecomposition:
    """
    Biconnected components of a graph.

    blocks are ordered by (smallest vertex, sorted members); a leaf-block
    holds at most one cut vertex. Isolated vertices belong to no block.
    """

    blocks: tuple[VertexSet, ...]
    cut_vertices: VertexSet
    leaf_blocks: tuple[VertexSet, ...]

    def cut_vertices_of(self, block: VertexSet) -> VertexSet:
        return block & self.cut_vertices
