import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from apps.graphs.services import DimacsService, GraphService
from apps.shared.exceptions import ParseError
from apps.shared.testing import K, petersen


class DimacsParseTestCase(SimpleTestCase):

    def test_parse_with_comments(self):
        graph = DimacsService.parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")

        self.assertEqual(graph, K(3))

    def test_isolated_vertices_come_from_header(self):
        graph = DimacsService.parse_graph("p edge 4 1\ne 1 2\n")

        self.assertEqual(graph.isolated, frozenset({2, 3}))

    def test_missing_header(self):
        with self.assertRaises(ParseError):
            DimacsService.parse_graph("e 1 2\n")

    def test_vertex_out_of_range_reports_line(self):
        with self.assertRaises(ParseError) as ctx:
            DimacsService.parse_graph("p edge 2 1\ne 1 3\n")

        self.assertEqual(ctx.exception.line_number, 2)
        self.assertIn("line 2", ctx.exception.message)

    def test_duplicate_edge(self):
        with self.assertRaises(ParseError):
            DimacsService.parse_graph("p edge 2 2\ne 1 2\ne 2 1\n")

    def test_self_loop(self):
        with self.assertRaises(ParseError):
            DimacsService.parse_graph("p edge 2 1\ne 2 2\n")

    def test_edge_count_mismatch(self):
        with self.assertRaises(ParseError):
            DimacsService.parse_graph("p edge 3 2\ne 1 2\n")

    def test_unreadable_file(self):
        with self.assertRaises(ParseError):
            DimacsService.read_graph("/nonexistent/graph.gr")

    def test_binary_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "graph.gr"
            path.write_bytes(b"p edge 2 1\n\xff\xfe\n")

            with self.assertRaises(ParseError) as ctx:
                DimacsService.read_graph(path)

        self.assertIn("not UTF-8", ctx.exception.message)


class DimacsFormatTestCase(SimpleTestCase):

    def test_format_is_canonical(self):
        text = DimacsService.format_graph(K(3), comments=["triangle"])

        self.assertEqual(text, "c triangle\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n")

    def test_sparse_ids_are_relabelled(self):
        graph = K(4).without({1})

        reparsed = DimacsService.parse_graph(DimacsService.format_graph(graph))

        self.assertEqual(reparsed, GraphService.relabel_dense(graph)[0])

    def test_written_graph_reparses_identically(self):
        reparsed = DimacsService.parse_graph(DimacsService.format_graph(petersen()))

        self.assertEqual(reparsed.edge_list(), petersen().edge_list())
