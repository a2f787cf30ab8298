"""Exception hierarchy.

Every domain failure carries a short ``code`` that the CLI reports in its
machine-readable diagnostics.
"""


class GentleTopoError(Exception):
    code = "Error"


class PresentationError(GentleTopoError, ValueError):
    """Malformed presentation text/JSON; ``line`` is 1-based when known."""

    code = "PresentationError"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotGentle(GentleTopoError):
    code = "NotGentle"


class RelationNotComposable(GentleTopoError):
    code = "RelationNotComposable"


class NotProper(GentleTopoError):
    code = "NotProper"


class NotSmooth(GentleTopoError):
    code = "NotSmooth"


class UnsupportedLoop(GentleTopoError):
    code = "UnsupportedLoop"


class DisconnectedAlgebra(GentleTopoError):
    code = "DisconnectedAlgebra"


class InvalidIdempotent(GentleTopoError):
    code = "InvalidIdempotent"


class NotAnForm(GentleTopoError, ValueError):
    code = "NotAnForm"


class InternalInconsistency(GentleTopoError):
    code = "InternalInconsistency"


class IndexOutOfRange(GentleTopoError, IndexError):
    code = "IndexOutOfRange"


class InconsistentWalk(GentleTopoError):
    code = "InconsistentWalk"


class NotEmbedded(GentleTopoError):
    code = "NotEmbedded"


class SymplecticBasisNotFound(GentleTopoError):
    code = "SymplecticBasisNotFound"


class GenusOutOfRange(GentleTopoError):
    code = "GenusOutOfRange"


class ArfUndefined(GentleTopoError):
    code = "ArfUndefined"
