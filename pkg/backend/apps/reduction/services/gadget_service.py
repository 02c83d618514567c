"""
Gadget Service - Clause gadgets chained from copies of a connected pattern
"""
import logging

from ..models import CopyLabels, GadgetAnchors, GadgetLabels
from apps.graphs.models import Graph, VertexSet
from apps.graphs.services import GraphService
from apps.shared.exceptions import PreconditionError
from apps.shared.messages.error import ERROR_MESSAGES
from apps.structure.services import StructureService

logger = logging.getLogger(__name__)


class _Identifier:
    """Sequential identifications with a running original id -> current id map"""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.current = {vertex: vertex for vertex in graph.vertices}

    def merge(self, keep: int, drop: int) -> None:
        self.graph, mapping = GraphService.identify(self.graph, self.current[keep], self.current[drop])
        self.current = {original: mapping[now] for original, now in self.current.items()}

    def finish(self) -> tuple[Graph, dict[int, int]]:
        dense, mapping = GraphService.relabel_dense(self.graph)
        return dense, {original: mapping[now] for original, now in self.current.items()}


class GadgetService:
    """
    The gadget M glues two copies H1, H2 of H and a copy L3 of its smallest
    leaf-block L:

        s = H1(c) = H2(b)      t = H2(c) = L3(c)
        u = H1(a)              w = H1(b)             v = L3(b)

    2n - 1 copies of M are chained through f_i(w) = f_{n+i}(v) and
    f_{n+i}(w) = f_{i+1}(u) for 1 <= i < n; S = {f_i(v) : i <= n}.
    """

    @staticmethod
    def gadget_anchors(pattern: Graph) -> GadgetAnchors:
        """
        Choose L, R, a, b, c.

        L is a smallest leaf-block (first in block order on ties) and R is H
        without the non-cut vertices of L. c is the cut vertex of L, or its
        smallest vertex when H is biconnected; b is the smallest other vertex
        of L; a is the smallest remaining vertex, taken from R when possible.

        Raises:
            PreconditionError: H disconnected or on fewer than 3 vertices
        """
        if pattern.n < 3:
            raise PreconditionError(ERROR_MESSAGES["PATTERN_TOO_SMALL"].format(size=pattern.n))
        if len(GraphService.connected_components(pattern)) != 1:
            raise PreconditionError(ERROR_MESSAGES["PATTERN_NOT_CONNECTED"])

        decomposition = StructureService.block_decomposition(pattern)
        leaf = min(decomposition.leaf_blocks, key=len)
        cuts = decomposition.cut_vertices_of(leaf)
        rest = pattern.vertex_set - (leaf - cuts)
        c = min(cuts) if cuts else min(leaf)
        b = min(leaf - {c})
        preferred = sorted(rest - {c})
        a = preferred[0] if preferred else min(pattern.vertex_set - {b, c})
        return GadgetAnchors(leaf=leaf, rest=rest, a=a, b=b, c=c)

    @staticmethod
    def gadget_unit(pattern: Graph) -> tuple[Graph, CopyLabels]:
        """The graph M with its labels"""
        anchors = GadgetService.gadget_anchors(pattern)
        leaf_graph = pattern.induced(anchors.leaf)
        union, (h1, h2, l3) = GraphService.disjoint_union([pattern, pattern, leaf_graph])

        builder = _Identifier(union)
        builder.merge(h1[anchors.c], h2[anchors.b])
        builder.merge(h2[anchors.c], l3[anchors.c])
        unit, at = builder.finish()

        def image(copy: dict[int, int], vertices) -> VertexSet:
            return frozenset(at[copy[x]] for x in vertices)

        labels = CopyLabels(
            u=at[h1[anchors.a]],
            v=at[l3[anchors.b]],
            w=at[h1[anchors.b]],
            s=at[h1[anchors.c]],
            t=at[h2[anchors.c]],
            h1=image(h1, pattern.vertices),
            h2=image(h2, pattern.vertices),
            l1=image(h1, anchors.leaf),
            l2=image(h2, anchors.leaf),
            l3=image(l3, anchors.leaf),
            r1=image(h1, anchors.rest),
            r2=image(h2, anchors.rest),
        )
        return unit, labels

    @staticmethod
    def clause_gadget(pattern: Graph, n: int) -> tuple[Graph, GadgetLabels]:
        """
        Build the clause gadget for a clause with n literals.

        Args:
            pattern: Connected H on at least 3 vertices
            n: Clause size

        Returns:
            (G, labels) with G on vertices 0..|V(G)|-1 and |S| = n

        Raises:
            PreconditionError: invalid pattern or n < 1
        """
        if n < 1:
            raise PreconditionError(ERROR_MESSAGES["CLAUSE_SIZE"].format(size=n))
        unit, unit_labels = GadgetService.gadget_unit(pattern)
        chain, maps = GraphService.copies(unit, 2 * n - 1)
        placed = [unit_labels.relabel(copy) for copy in maps]

        def f(index: int) -> CopyLabels:
            return placed[index - 1]

        builder = _Identifier(chain)
        for i in range(1, n):
            builder.merge(f(i).w, f(n + i).v)
            builder.merge(f(n + i).w, f(i + 1).u)
        graph, at = builder.finish()

        copies = tuple(copy.relabel(at) for copy in placed)
        labels = GadgetLabels(n=n, copies=copies, modulator=tuple(copies[i].v for i in range(n)))
        logger.debug(f"Clause gadget n={n}: {graph.n} vertices, M has {unit.n}")
        return graph, labels

    @staticmethod
    def clause_gadget_solution(labels: GadgetLabels, j: int) -> VertexSet:
        """
        The deletion set for the literal at position j:

            {f_i(t), f_i(w), f_{i+n}(s)}     for i < j
            {f_j(v), f_j(s)}
            {f_i(t), f_i(u), f_{i+n-1}(t)}   for j < i <= n

        Raises:
            PreconditionError: j outside 1..n
        """
        n = labels.n
        if not 1 <= j <= n:
            raise PreconditionError(ERROR_MESSAGES["CLAUSE_INDEX"].format(index=j, n=n))
        f = labels.copy
        chosen: set[int] = {f(j).v, f(j).s}
        for i in range(1, j):
            chosen |= {f(i).t, f(i).w, f(i + n).s}
        for i in range(j + 1, n + 1):
            chosen |= {f(i).t, f(i).u, f(i + n - 1).t}
        return frozenset(chosen)

    @staticmethod
    def gadget_packing(labels: GadgetLabels, avoid_modulator: bool = False) -> list[VertexSet]:
        """
        Vertex-disjoint H-subgraphs of the gadget.

        In G: H1 and L3 ∪ R2 of every M_i with i <= n, H2 of the others
        (3n - 1 sets). Avoiding S: H2 of M_i for i <= n, H1 and L3 ∪ R2 of
        the others (3n - 2 sets).
        """
        n = labels.n
        packing: list[VertexSet] = []
        for index, copy in enumerate(labels.copies, start=1):
            front = index <= n
            if front != avoid_modulator:
                packing.extend([copy.h1, copy.l3 | copy.r2])
            else:
                packing.append(copy.h2)
        return packing
