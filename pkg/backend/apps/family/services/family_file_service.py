"""
Family File Service - `g <name>` blocks of graph-format members
"""
import logging
from pathlib import Path

from ..models import Family
from .family_service import FamilyService
from apps.graphs.services import DimacsService
from apps.shared.caps import check_cap
from apps.shared.exceptions import ParseError
from apps.shared.messages.error import ERROR_MESSAGES

logger = logging.getLogger(__name__)


class FamilyFileService:
    """
    Family file:

        g <name>
        p edge <n> <m>
        e <u> <v>
        ...
        g <name>
        ...
    """

    @staticmethod
    def parse_family(text: str) -> Family:
        """
        Raises:
            ParseError: malformed blocks or member graphs
            CapExceededError: member above the family member cap
        """
        blocks: list[tuple[str, list[tuple[int, str]]]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            tokens = line.split()
            if tokens and tokens[0] == "g":
                if len(tokens) < 2:
                    raise ParseError(ERROR_MESSAGES["UNNAMED_MEMBER"], number)
                blocks.append((" ".join(tokens[1:]), []))
                continue
            if not blocks:
                if line and not line.startswith("c"):
                    raise ParseError(ERROR_MESSAGES["GRAPH_OUTSIDE_BLOCK"], number)
                continue
            blocks[-1][1].append((number, raw))

        if not blocks:
            raise ParseError(ERROR_MESSAGES["EMPTY_FAMILY"])

        names, members = [], []
        for name, lines in blocks:
            member = DimacsService.parse_lines(lines)
            check_cap("family_member", member.n, f"Family member {name}")
            names.append(name)
            members.append(member)
        return FamilyService.build_family(members, names)

    @staticmethod
    def read_family(path: str | Path) -> Family:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except UnicodeDecodeError:
            raise ParseError(ERROR_MESSAGES["NOT_TEXT"].format(path=path))
        except OSError:
            raise ParseError(ERROR_MESSAGES["FILE_NOT_FOUND"].format(path=path))
        return FamilyFileService.parse_family(text)

    @staticmethod
    def format_family(family: Family) -> str:
        return "".join(
            f"g {name}\n{DimacsService.format_graph(member)}"
            for name, member in zip(family.names, family.members)
        )
