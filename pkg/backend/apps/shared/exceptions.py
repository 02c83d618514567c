class FdelException(Exception):
    """
    Base exception for rejected inputs, exceeded caps and regime mismatches
    """

    def __init__(self, message):
        self.message = message
        super().__init__(message)


class InvalidGraphError(FdelException):
    """Graph invariant broken or vertex set not contained in the graph"""


class ParseError(FdelException):
    """Malformed graph, family or CNF input"""

    def __init__(self, message, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class CapExceededError(FdelException):
    """Desk-scale limit exceeded; the message names the overriding flag"""


class LowerBoundRegimeError(FdelException):
    """Family is in the wrong regime for the requested engine"""


class PreconditionError(FdelException):
    """Operation called outside its precondition"""


class InvariantViolation(FdelException):
    """A debug-mode self check of the solver failed"""
