import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from apps.shared.testing import K, P, copies, family_text, graph_text


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)
        self.root = Path(self.directory.name)

    def write(self, name, text):
        path = self.root / name
        path.write_text(text)
        return str(path)

    def call(self, *args):
        out, err = StringIO(), StringIO()
        call_command(*args, stdout=out, stderr=err)
        return out.getvalue(), err.getvalue()


@override_settings(FDEL_TRACK_QUERY_FVS=False)
class SolveCommandTestCase(CommandTestCase):

    def test_yes(self):
        family = self.write("f.txt", family_text({"edge": P(2)}))
        graph = self.write("g.gr", graph_text(K(3)))

        out, _ = self.call("solve", "--family", family, "--graph", graph, "--ell", "2", "--type", "minor")

        self.assertEqual(out.splitlines()[0], "YES")

    def test_no(self):
        family = self.write("f.txt", family_text({"matching": copies(P(2), 2)}))
        graph = self.write("g.gr", graph_text(copies(K(3), 2)))

        out, _ = self.call("solve", "--family", family, "--graph", graph, "--ell", "1")

        self.assertEqual(out.splitlines(), ["NO"])

    def test_witness(self):
        family = self.write("f.txt", family_text({"edge": P(2)}))
        graph = self.write("g.gr", graph_text(K(3)))

        out, _ = self.call("solve", "--family", family, "--graph", graph, "--ell", "2", "--witness")

        lines = out.splitlines()
        self.assertEqual(lines[0], "YES")
        self.assertTrue(lines[1].startswith("witness: "))
        ids = [int(token) for token in lines[1].split()[1:]]
        self.assertEqual(len(ids), 2)
        self.assertTrue(all(1 <= vertex <= 3 for vertex in ids))

    def test_lower_bound_regime_with_turing_engine(self):
        family = self.write("f.txt", family_text({"triangle": K(3)}))
        graph = self.write("g.gr", graph_text(K(4)))

        with self.assertRaises(CommandError) as ctx:
            self.call("solve", "--family", family, "--graph", graph, "--ell", "2", "--engine", "turing")

        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn("lower-bound regime", str(ctx.exception))

    def test_query_log(self):
        family = self.write("f.txt", family_text({"edge": P(2)}))
        graph = self.write("g.gr", graph_text(K(3)))
        log = self.root / "queries.jsonl"

        _, err = self.call("solve", "--family", family, "--graph", graph, "--ell", "2", "--log-queries", str(log))

        records = [json.loads(line) for line in log.read_text().splitlines()]
        self.assertTrue(records)
        self.assertTrue(records[-1]["answer"])
        self.assertIn("queries logged", err)

    def test_emit_queries(self):
        family = self.write("f.txt", family_text({"edge": P(2)}))
        graph = self.write("g.gr", graph_text(K(3)))
        emit = self.root / "emitted"

        self.call("solve", "--family", family, "--graph", graph, "--ell", "2", "--emit-queries", str(emit))

        self.assertTrue(list(emit.glob("query_*.gr")))

    def test_parse_error_exits_with_two(self):
        family = self.write("f.txt", family_text({"edge": P(2)}))
        graph = self.write("g.gr", "p edge 2 1\ne 1 3\n")

        with self.assertRaises(CommandError) as ctx:
            self.call("solve", "--family", family, "--graph", graph, "--ell", "1")

        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn("line 2", str(ctx.exception))

    def test_budget_out_of_range(self):
        family = self.write("f.txt", family_text({"edge": P(2)}))
        graph = self.write("g.gr", graph_text(K(3)))

        with self.assertRaises(CommandError) as ctx:
            self.call("solve", "--family", family, "--graph", graph, "--ell", "4")

        self.assertEqual(ctx.exception.returncode, 2)

    @patch("apps.cli.management.commands.solve.KernelService.solve")
    def test_unexpected_error_is_logged(self, mock_solve):
        mock_solve.side_effect = RuntimeError("boom")
        family = self.write("f.txt", family_text({"edge": P(2)}))
        graph = self.write("g.gr", graph_text(K(3)))

        with self.assertLogs("apps.cli", level="ERROR") as logs, self.assertRaises(CommandError) as ctx:
            self.call("solve", "--family", family, "--graph", graph, "--ell", "2")

        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn("unexpected error", str(ctx.exception))
        self.assertIn("fdel solve failed", logs.output[0])
        self.assertIsInstance(logs.records[0].exc_info[1], RuntimeError)


class ReduceCommandTestCase(CommandTestCase):

    def test_single_pattern(self):
        cnf = self.write("phi.cnf", "p cnf 1 1\n1 0\n")
        family = self.write("f.txt", family_text({"triangle": K(3)}))
        out_graph = self.root / "hard.gr"

        out, _ = self.call("reduce", "--cnf", cnf, "--family", family, "--out-graph", str(out_graph))

        meta = json.loads(Path(f"{out_graph}.json").read_text())
        self.assertEqual(meta["ell"], 2)
        self.assertEqual(meta["n"], 9)
        self.assertEqual(meta["family_file"], family)
        self.assertEqual(meta["type"], "minor")
        self.assertEqual(len(meta["modulator"]), 2)
        self.assertTrue(out_graph.read_text().startswith("c ell 2\np edge 9 "))
        self.assertIn("Instance written", out)

    def test_family(self):
        cnf = self.write("phi.cnf", "p cnf 1 1\n1 0\n")
        family = self.write("f.txt", family_text({"two triangles": copies(K(3), 2)}))
        out_graph = self.root / "hard.gr"
        out_meta = self.root / "meta.json"

        self.call(
            "reduce", "--cnf", cnf, "--family", family,
            "--out-graph", str(out_graph), "--out-meta", str(out_meta),
        )

        meta = json.loads(out_meta.read_text())
        self.assertEqual(meta["ell"], 6)
        self.assertEqual(len(meta["labels"]["copies"]), 3)

    def test_wrong_regime(self):
        cnf = self.write("phi.cnf", "p cnf 1 1\n1 0\n")
        family = self.write("f.txt", family_text({"matching": copies(P(2), 2)}))

        with self.assertRaises(CommandError) as ctx:
            self.call("reduce", "--cnf", cnf, "--family", family, "--out-graph", str(self.root / "g.gr"))

        self.assertEqual(ctx.exception.returncode, 2)

    def test_verify(self):
        cnf = self.write("phi.cnf", "p cnf 1 2\n1 0\n-1 0\n")
        family = self.write("f.txt", family_text({"triangle": K(3)}))

        out, _ = self.call(
            "reduce", "--cnf", cnf, "--family", family, "--out-graph", str(self.root / "g.gr"), "--verify",
        )

        report = json.loads(out[out.index("{"):out.rindex("}") + 1])
        self.assertTrue(report["passed"])
        self.assertIn("checks passed", out)


class GadgetCommandTestCase(CommandTestCase):

    def test_report_and_graph(self):
        pattern = self.write("h.gr", graph_text(K(3)))
        out_graph = self.root / "gadget.gr"

        out, err = self.call("gadget", "--pattern", pattern, "--clauses", "2", "--out-graph", str(out_graph))

        self.assertTrue(json.loads(out)["passed"])
        lines = out_graph.read_text().splitlines()
        self.assertTrue(lines[0].startswith("c S "))
        self.assertEqual(len(lines[0].split()), 4)
        self.assertEqual(lines[1], "p edge 19 27")
        self.assertIn("Gadget written", err)

    def test_disconnected_pattern(self):
        pattern = self.write("h.gr", graph_text(copies(K(3), 2)))

        with self.assertRaises(CommandError) as ctx:
            self.call("gadget", "--pattern", pattern, "--clauses", "1")

        self.assertEqual(ctx.exception.returncode, 2)

    def test_cap_and_override(self):
        pattern = self.write("h.gr", graph_text(K(3)))

        with self.assertRaises(CommandError):
            self.call("gadget", "--pattern", pattern, "--clauses", "3")

        with self.assertLogs("apps.shared", level="WARNING"):
            out, _ = self.call("gadget", "--pattern", pattern, "--clauses", "3", "--gadget-clause-cap", "3")

        self.assertTrue(json.loads(out)["passed"])


class AnalyzeCommandTestCase(CommandTestCase):

    def test_complete_graph(self):
        graph = self.write("g.gr", graph_text(K(4)))

        out, _ = self.call("analyze", "--graph", graph)

        report = json.loads(out)
        self.assertEqual((report["treewidth"], report["fvs_size"]), (3, 2))
        self.assertEqual((report["n"], report["m"], report["matching_number"]), (4, 6, 2))
        self.assertNotIn("family", report)

    def test_path(self):
        graph = self.write("g.gr", graph_text(P(3)))

        report = json.loads(self.call("analyze", "--graph", graph)[0])

        self.assertEqual(report["slb"], 2)
        self.assertEqual(report["cut_vertices"], [2])

    def test_family_constants(self):
        graph = self.write("g.gr", graph_text(P(3)))
        family = self.write("f.txt", family_text({"matching": copies(P(2), 2), "triangle": K(3)}))

        report = json.loads(self.call("analyze", "--graph", graph, "--family", family)[0])

        self.assertEqual(
            (report["family"]["m"], report["family"]["alpha"], report["family"]["mintw"]), (1, 12, 1)
        )

    def test_treewidth_over_cap_is_null(self):
        graph = self.write("g.gr", graph_text(K(4)))

        with self.assertLogs("apps", level="WARNING"):
            report = json.loads(self.call("analyze", "--graph", graph, "--tw-cap", "2")[0])

        self.assertIsNone(report["treewidth"])
        self.assertEqual(report["fvs_size"], 2)

    def test_missing_graph_file(self):
        with self.assertRaises(CommandError) as ctx:
            self.call("analyze", "--graph", str(self.root / "absent.gr"))

        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn("absent.gr", str(ctx.exception))

    def test_family_only(self):
        family = self.write("f.txt", family_text({"matching": copies(P(2), 2), "triangle": K(3)}))

        report = json.loads(self.call("analyze", "--family", family)[0])

        self.assertEqual((report["m"], report["alpha"], report["mintw"]), (1, 12, 1))
        self.assertNotIn("treewidth", report)

    def test_needs_an_input(self):
        with self.assertRaises(CommandError) as ctx:
            self.call("analyze")

        self.assertEqual(ctx.exception.returncode, 2)

    def test_binary_inputs_exit_with_two(self):
        binary = self.root / "binary"
        binary.write_bytes(b"\xff\xfe\x00p edge")
        cnf = self.root / "binary.cnf"
        cnf.write_bytes(b"\xffp cnf 1 1\n1 0\n")
        family = self.write("f.txt", family_text({"triangle": K(3)}))

        for args in (
            ("analyze", "--graph", str(binary)),
            ("analyze", "--family", str(binary)),
            ("reduce", "--cnf", str(cnf), "--family", family, "--out-graph", str(self.root / "g.gr")),
        ):
            with self.subTest(args=args), self.assertRaises(CommandError) as ctx:
                self.call(*args)

            self.assertEqual(ctx.exception.returncode, 2)
            self.assertIn("not UTF-8", str(ctx.exception))
