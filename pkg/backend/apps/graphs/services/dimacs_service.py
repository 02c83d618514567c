"""
DIMACS Service - Reads and writes the `p edge` graph format
"""
import logging
from pathlib import Path
from typing import Iterable

from ..models import Graph
from .graph_service import GraphService
from apps.shared.exceptions import ParseError
from apps.shared.messages.error import ERROR_MESSAGES

logger = logging.getLogger(__name__)


class DimacsService:
    """
    Graph text format:

        c optional comment
        p edge <n> <m>
        e <u> <v>          (m lines, 1-indexed endpoints)
    """

    @staticmethod
    def parse_lines(lines: Iterable[tuple[int, str]]) -> Graph:
        """
        Parse numbered lines of one graph block.

        Args:
            lines: (line_number, text) pairs

        Returns:
            Graph on vertices 0..n-1

        Raises:
            ParseError: malformed header or edge lines
        """
        n: int | None = None
        expected_edges = 0
        edges: set[tuple[int, int]] = set()

        for number, raw in lines:
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            tokens = line.split()
            if tokens[0] == "p":
                if n is not None:
                    raise ParseError(ERROR_MESSAGES["DUPLICATE_HEADER"], number)
                if len(tokens) != 4 or tokens[1] != "edge":
                    raise ParseError(ERROR_MESSAGES["BAD_HEADER"].format(line=line), number)
                try:
                    n, expected_edges = int(tokens[2]), int(tokens[3])
                except ValueError:
                    raise ParseError(ERROR_MESSAGES["BAD_HEADER"].format(line=line), number)
                if n < 0 or expected_edges < 0:
                    raise ParseError(ERROR_MESSAGES["BAD_HEADER"].format(line=line), number)
                continue
            if tokens[0] != "e" or len(tokens) != 3:
                raise ParseError(ERROR_MESSAGES["BAD_LINE"].format(line=line), number)
            if n is None:
                raise ParseError(ERROR_MESSAGES["MISSING_HEADER"].format(kind="edge"), number)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(ERROR_MESSAGES["BAD_LINE"].format(line=line), number)
            for vertex in (u, v):
                if not 1 <= vertex <= n:
                    raise ParseError(ERROR_MESSAGES["VERTEX_OUT_OF_RANGE"].format(vertex=vertex, n=n), number)
            if u == v:
                raise ParseError(ERROR_MESSAGES["SELF_LOOP"].format(vertex=u), number)
            edge = (min(u, v) - 1, max(u, v) - 1)
            if edge in edges:
                raise ParseError(ERROR_MESSAGES["DUPLICATE_EDGE"].format(u=u, v=v), number)
            edges.add(edge)

        if n is None:
            raise ParseError(ERROR_MESSAGES["MISSING_HEADER"].format(kind="edge"))
        if len(edges) != expected_edges:
            raise ParseError(
                ERROR_MESSAGES["EDGE_COUNT_MISMATCH"].format(expected=expected_edges, found=len(edges))
            )
        return Graph.from_edges(range(n), edges)

    @staticmethod
    def parse_graph(text: str) -> Graph:
        return DimacsService.parse_lines(enumerate(text.splitlines(), start=1))

    @staticmethod
    def read_graph(path: str | Path) -> Graph:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except UnicodeDecodeError:
            raise ParseError(ERROR_MESSAGES["NOT_TEXT"].format(path=path))
        except OSError:
            raise ParseError(ERROR_MESSAGES["FILE_NOT_FOUND"].format(path=path))
        graph = DimacsService.parse_graph(text)
        logger.info(f"Read graph from {path}: n={graph.n}, m={graph.m}")
        return graph

    @staticmethod
    def format_graph(graph: Graph, comments: Iterable[str] = ()) -> str:
        """Canonical text: dense relabelling, sorted edges with u < v"""
        dense, _ = GraphService.relabel_dense(graph)
        lines = [f"c {comment}" for comment in comments]
        lines.append(f"p edge {dense.n} {dense.m}")
        lines.extend(f"e {u + 1} {v + 1}" for u, v in dense.edge_list())
        return "\n".join(lines) + "\n"

    @staticmethod
    def write_graph(path: str | Path, graph: Graph, comments: Iterable[str] = ()) -> None:
        Path(path).write_text(DimacsService.format_graph(graph, comments))
        logger.info(f"Wrote graph to {path}: n={graph.n}, m={graph.m}")
