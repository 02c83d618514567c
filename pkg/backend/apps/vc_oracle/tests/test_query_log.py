import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from apps.graphs.services import DimacsService
from apps.shared.testing import C, K
from apps.vc_oracle.models import QueryRecord
from apps.vc_oracle.services import QueryLog, VcService


class QueryLogTestCase(SimpleTestCase):

    def test_jsonl_has_one_object_per_query(self):
        log = QueryLog()
        VcService.vc_oracle(K(3), 2, log)
        VcService.vc_oracle(C(5), 3, log)

        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "queries.jsonl"
            count = log.write_jsonl(path)
            lines = path.read_text().splitlines()

        self.assertEqual(count, 2)
        first = json.loads(lines[0])
        self.assertEqual(first["original_n"], 3)
        self.assertEqual(first["vertices"], [0, 1, 2])
        self.assertEqual(
            set(first),
            {"original_n", "reduced_n", "budget", "reduced_budget", "fvs_of_query", "answer", "vertices"},
        )

    def test_emitted_queries_are_graph_files(self):
        with tempfile.TemporaryDirectory() as directory:
            log = QueryLog(emit_dir=Path(directory) / "queries")
            VcService.vc_oracle(C(5), 3, log)

            emitted = sorted((Path(directory) / "queries").iterdir())
            text = emitted[0].read_text()
            graph = DimacsService.parse_graph(text)

        self.assertEqual([path.name for path in emitted], ["query_00000.gr"])
        self.assertIn("c budget 3", text)
        self.assertEqual(graph.n, 5)

    def test_record_equality_ignores_vertices(self):
        first = QueryRecord(3, 3, 2, 2, 1, True, vertices=(0, 1, 2))
        second = QueryRecord(3, 3, 2, 2, 1, True, vertices=(4, 5, 6))

        self.assertEqual(first, second)
