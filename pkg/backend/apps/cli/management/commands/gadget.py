import json

from apps.cli.management.base import FdelCommand
from apps.graphs.services import DimacsService
from apps.reduction.services import GadgetService, VerificationService
from apps.shared.exceptions import FdelException
from apps.shared.messages.error import ERROR_MESSAGES
from apps.shared.messages.success import SUCCESS_MESSAGES


class Command(FdelCommand):
    help = "Build a clause gadget for a connected pattern and verify its guarantees."

    output_options = ("out_graph",)

    def add_command_arguments(self, parser):
        parser.add_argument("--pattern", required=True, help="Graph file of the connected pattern H")
        parser.add_argument("--clauses", required=True, type=int, help="Clause size n")
        parser.add_argument("--out-graph", required=False, help="Write the gadget graph here")

    def run(self, config, options):
        pattern = DimacsService.read_graph(options["pattern"])
        report = VerificationService.verify_gadget(pattern, options["clauses"])
        self.stdout.write(json.dumps(report.as_dict(), indent=2))

        out_graph = config.outputs["out_graph"]
        if out_graph:
            graph, labels = GadgetService.clause_gadget(pattern, options["clauses"])
            modulator = " ".join(str(vertex + 1) for vertex in labels.modulator)
            DimacsService.write_graph(out_graph, graph, comments=[f"S {modulator}"])
            self.stderr.write(self.style.SUCCESS(SUCCESS_MESSAGES["GADGET_WRITTEN"].format(path=out_graph)))

        if not report.passed:
            raise FdelException(ERROR_MESSAGES["VERIFICATION_FAILED"].format(checks=", ".join(report.failures)))
