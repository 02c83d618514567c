"""
Shared plumbing of the fdel management commands
"""
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from ..models import RunConfig
from apps.shared.caps import CAP_FLAGS, override_caps
from apps.shared.exceptions import FdelException
from apps.shared.messages.error import ERROR_MESSAGES

logger = logging.getLogger(__name__)

# --verbosity -> level of the "apps" logger
VERBOSITY_LEVELS = {
    0: logging.ERROR,
    1: logging.WARNING,
    2: logging.INFO,
    3: logging.DEBUG,
}
ERROR_EXIT_CODE = 2


class FdelCommand(BaseCommand):
    """
    Subclasses implement add_command_arguments and run. Every FdelException
    leaves with exit status 2 and its message; unexpected errors are
    logged with their traceback and leave with the generic message.
    """

    output_options: tuple[str, ...] = ()

    def add_arguments(self, parser):
        self.add_command_arguments(parser)
        caps = parser.add_argument_group("desk-scale limits")
        for name, flag in CAP_FLAGS.items():
            caps.add_argument(flag, dest=f"cap_{name}", type=int, default=None, help=f"Override the {name} limit")

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        logging.getLogger("apps").setLevel(VERBOSITY_LEVELS.get(options.get("verbosity", 1), logging.DEBUG))
        config = self.build_config(options)
        try:
            with override_caps(**config.caps):
                self.run(config, options)
        except FdelException as exc:
            raise CommandError(exc.message, returncode=ERROR_EXIT_CODE)
        except CommandError:
            raise
        except Exception:
            logger.exception(f"fdel {config.command} failed")
            raise CommandError(ERROR_MESSAGES["SYSTEM_ERROR"], returncode=ERROR_EXIT_CODE)

    def build_config(self, options) -> RunConfig:
        def path(key: str) -> Path | None:
            value = options.get(key)
            return Path(value) if value else None

        return RunConfig(
            command=self.__module__.rsplit(".", 1)[-1],
            graph_path=path("graph"),
            family_path=path("family"),
            containment=options.get("type") or "minor",
            ell=options.get("ell"),
            engine=options.get("engine") or "auto",
            caps={name: options.get(f"cap_{name}") for name in CAP_FLAGS},
            outputs={key: path(key) for key in self.output_options},
            threads=options.get("threads"),
            verbosity=options.get("verbosity", 1),
        )

    def run(self, config: RunConfig, options: dict) -> None:
        raise NotImplementedError
