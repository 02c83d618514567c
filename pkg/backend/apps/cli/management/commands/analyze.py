import json

from apps.cli.management.base import FdelCommand
from apps.cli.services import ReportService
from apps.family.services import FamilyFileService
from apps.graphs.services import DimacsService
from apps.shared.exceptions import PreconditionError
from apps.shared.messages.error import ERROR_MESSAGES


class Command(FdelCommand):
    help = "Print a JSON report of a graph, of a family's constants, or of both."

    def add_command_arguments(self, parser):
        parser.add_argument("--graph", required=False, help="Graph file")
        parser.add_argument("--family", required=False, help="Family file")

    def run(self, config, options):
        if not config.graph_path and not config.family_path:
            raise PreconditionError(ERROR_MESSAGES["ANALYZE_NOTHING"])
        graph = DimacsService.read_graph(config.graph_path) if config.graph_path else None
        family = FamilyFileService.read_family(config.family_path) if config.family_path else None
        self.stdout.write(json.dumps(ReportService.analyze(graph, family), indent=2))
