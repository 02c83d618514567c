"""
CNF Service - DIMACS CNF input/output and exhaustive satisfiability
"""
import logging
from itertools import product
from pathlib import Path
from typing import Iterable

from ..models import CnfFormula
from apps.shared.exceptions import ParseError
from apps.shared.messages.error import ERROR_MESSAGES

logger = logging.getLogger(__name__)


class CnfService:
    """
    Formula text format:

        c optional comment
        p cnf <k> <m>
        1 -2 0             (clauses terminated by 0, may span lines)
        %                  (optional end marker, the rest is ignored)
    """

    @staticmethod
    def parse_cnf(text: str) -> CnfFormula:
        """
        Parse a DIMACS CNF document.

        Raises:
            ParseError: malformed header, empty clause, repeated literal,
                variable out of range, missing terminator or count mismatch
        """
        k: int | None = None
        expected: int | None = None
        clauses: list[tuple[int, ...]] = []
        current: list[int] = []

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if line.startswith("%"):
                break
            if not line or line.startswith("c"):
                continue
            tokens = line.split()
            if tokens[0] == "p":
                if k is not None:
                    raise ParseError(ERROR_MESSAGES["DUPLICATE_HEADER"], number)
                if len(tokens) != 4 or tokens[1] != "cnf":
                    raise ParseError(ERROR_MESSAGES["BAD_HEADER"].format(line=line), number)
                try:
                    k, expected = int(tokens[2]), int(tokens[3])
                except ValueError:
                    raise ParseError(ERROR_MESSAGES["BAD_HEADER"].format(line=line), number)
                if k < 0 or expected < 0:
                    raise ParseError(ERROR_MESSAGES["BAD_HEADER"].format(line=line), number)
                continue
            if k is None:
                raise ParseError(ERROR_MESSAGES["MISSING_HEADER"].format(kind="cnf"), number)

            for token in tokens:
                try:
                    literal = int(token)
                except ValueError:
                    raise ParseError(ERROR_MESSAGES["BAD_LINE"].format(line=line), number)
                if literal == 0:
                    if not current:
                        raise ParseError(ERROR_MESSAGES["EMPTY_CLAUSE"], number)
                    clauses.append(tuple(current))
                    current = []
                    continue
                if abs(literal) > k:
                    raise ParseError(
                        ERROR_MESSAGES["LITERAL_OUT_OF_RANGE"].format(literal=literal, k=k), number
                    )
                if literal in current:
                    raise ParseError(ERROR_MESSAGES["DUPLICATE_LITERAL"].format(literal=literal), number)
                current.append(literal)

        if k is None:
            raise ParseError(ERROR_MESSAGES["MISSING_HEADER"].format(kind="cnf"))
        if current:
            raise ParseError(ERROR_MESSAGES["UNTERMINATED_CLAUSE"])
        if len(clauses) != expected:
            raise ParseError(
                ERROR_MESSAGES["CLAUSE_COUNT_MISMATCH"].format(expected=expected, found=len(clauses))
            )
        if not clauses:
            raise ParseError(ERROR_MESSAGES["NO_CLAUSES"])
        return CnfFormula(k=k, clauses=tuple(clauses))

    @staticmethod
    def read_cnf(path: str | Path) -> CnfFormula:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except UnicodeDecodeError:
            raise ParseError(ERROR_MESSAGES["NOT_TEXT"].format(path=path))
        except OSError:
            raise ParseError(ERROR_MESSAGES["FILE_NOT_FOUND"].format(path=path))
        formula = CnfService.parse_cnf(text)
        logger.info(f"Read formula from {path}: k={formula.k}, m={formula.m}, n={formula.n}")
        return formula

    @staticmethod
    def format_cnf(formula: CnfFormula, comments: Iterable[str] = ()) -> str:
        lines = [f"c {comment}" for comment in comments]
        lines.append(f"p cnf {formula.k} {formula.m}")
        lines.extend(" ".join(str(literal) for literal in clause) + " 0" for clause in formula.clauses)
        return "\n".join(lines) + "\n"

    @staticmethod
    def satisfying_assignment(formula: CnfFormula) -> dict[int, bool] | None:
        """First satisfying assignment in lexicographic order (False before True), or None"""
        variables = range(1, formula.k + 1)
        for values in product((False, True), repeat=formula.k):
            assignment = dict(zip(variables, values))
            if formula.evaluate(assignment):
                return assignment
        return None

    @staticmethod
    def is_satisfiable(formula: CnfFormula) -> bool:
        return CnfService.satisfying_assignment(formula) is not None
