import json
from pathlib import Path

from apps.cli.management.base import FdelCommand
from apps.family.services import FamilyFileService
from apps.graphs.services import DimacsService
from apps.minors.models import ContainmentType
from apps.reduction.services import CnfService, InstanceService, VerificationService
from apps.shared.exceptions import FdelException
from apps.shared.messages.error import ERROR_MESSAGES
from apps.shared.messages.success import SUCCESS_MESSAGES


class Command(FdelCommand):
    help = "Generate a hard F-deletion instance from a CNF formula."

    output_options = ("out_graph", "out_meta")

    def add_command_arguments(self, parser):
        parser.add_argument("--cnf", required=True, help="DIMACS CNF file")
        parser.add_argument("--family", required=True, help="Family file")
        parser.add_argument("--type", default="minor", choices=[c.value for c in ContainmentType])
        parser.add_argument("--out-graph", required=True, help="Graph file to write")
        parser.add_argument("--out-meta", required=False, help="Metadata JSON (default: <out-graph>.json)")
        parser.add_argument("--verify", action="store_true", help="Run the desk-scale soundness checks")

    def run(self, config, options):
        formula = CnfService.read_cnf(options["cnf"])
        family = FamilyFileService.read_family(config.family_path)
        artifact = InstanceService.build_instance_family(family, formula)

        out_graph = config.outputs["out_graph"]
        out_meta = config.outputs["out_meta"] or Path(f"{out_graph}.json")
        DimacsService.write_graph(out_graph, artifact.graph, comments=[f"ell {artifact.ell}"])
        meta = InstanceService.metadata(artifact, str(config.family_path), config.containment)
        out_meta.write_text(json.dumps(meta, indent=2) + "\n")
        self.stdout.write(self.style.SUCCESS(
            SUCCESS_MESSAGES["INSTANCE_WRITTEN"].format(graph=out_graph, meta=out_meta)
        ))

        if options["verify"]:
            report = VerificationService.verify_instance(artifact, formula, family, config.containment)
            self.stdout.write(json.dumps(report.as_dict(), indent=2))
            if not report.passed:
                raise FdelException(ERROR_MESSAGES["VERIFICATION_FAILED"].format(checks=", ".join(report.failures)))
            self.stdout.write(self.style.SUCCESS(
                SUCCESS_MESSAGES["VERIFICATION_PASSED"].format(count=len(report.checks))
            ))
