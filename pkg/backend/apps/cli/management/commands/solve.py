from django.conf import settings

from apps.cli.management.base import FdelCommand
from apps.family.services import FamilyFileService
from apps.graphs.services import DimacsService
from apps.kernel.models import DeletionInstance, Engine
from apps.kernel.services import KernelService
from apps.minors.models import ContainmentType
from apps.shared.messages.success import SUCCESS_MESSAGES
from apps.vc_oracle.services import QueryLog


class Command(FdelCommand):
    help = "Decide F-minor-free or F-subgraph-free deletion; prints YES or NO."

    def add_command_arguments(self, parser):
        parser.add_argument("--family", required=True, help="Family file")
        parser.add_argument("--graph", required=True, help="Graph file")
        parser.add_argument("--ell", required=True, type=int, help="Deletion budget")
        parser.add_argument("--type", default="minor", choices=[c.value for c in ContainmentType])
        parser.add_argument("--engine", default="auto", choices=[e.value for e in Engine])
        parser.add_argument("--log-queries", required=False, help="Write oracle queries as JSON lines")
        parser.add_argument("--emit-queries", required=False, help="Directory receiving every reduced query")
        parser.add_argument("--threads", type=int, default=None, help="Worker threads for the kernel")
        parser.add_argument("--witness", action="store_true", help="Also print a deletion set when known")

    def run(self, config, options):
        family = FamilyFileService.read_family(config.family_path)
        graph = DimacsService.read_graph(config.graph_path)
        instance = DeletionInstance(graph=graph, budget=config.ell, containment=config.containment, family=family)
        query_log = QueryLog(emit_dir=options.get("emit_queries"))

        result = KernelService.solve(
            instance,
            engine=config.engine,
            query_log=query_log,
            threads=config.threads,
            debug=settings.DEBUG or options["witness"],
        )
        self.stdout.write("YES" if result.answer else "NO")
        if options["witness"] and result.witness is not None:
            self.stdout.write("witness: " + " ".join(str(vertex + 1) for vertex in sorted(result.witness)))

        if options.get("log_queries"):
            count = query_log.write_jsonl(options["log_queries"])
            self.stderr.write(self.style.SUCCESS(
                SUCCESS_MESSAGES["QUERIES_WRITTEN"].format(count=count, path=options["log_queries"])
            ))
