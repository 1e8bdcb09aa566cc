"""Exception hierarchy shared by all modules.

Every error carries a short machine name (the class name) and an optional
witness, which the CLI prints as ``Name(witness, ...)``.
"""


class MarkedOrdError(Exception):
    """Base class; ``witness`` holds the offending labels/values."""

    def __init__(self, *witness, message=None):
        self.witness = witness
        self.message = message
        super().__init__(message or self.render())

    def render(self):
        inner = ",".join(str(w) for w in self.witness)
        return f"{type(self).__name__}({inner})"


class ParseError(MarkedOrdError):
    pass


# poset_core
class CycleError(MarkedOrdError):
    pass


class UnknownLabel(MarkedOrdError):
    pass


class NotAFacePartition(MarkedOrdError):
    pass


# polynomial
class UnknownVariable(MarkedOrdError):
    pass


class DuplicateAbscissa(MarkedOrdError):
    pass


# marked_order
class InvalidMarking(MarkedOrdError):
    pass


class MissingExtremes(InvalidMarking):
    pass


class NotOrderPreserving(InvalidMarking):
    pass


class InvalidCell(MarkedOrdError):
    pass


class NotAChain(MarkedOrdError):
    pass


# monotone_triangles
class NotIncreasing(MarkedOrdError):
    pass


class NotDecreasing(MarkedOrdError):
    pass


class QuotientInconsistent(MarkedOrdError):
    pass


class NotADMT(MarkedOrdError):
    pass


# coloring
class PaletteTooSmall(MarkedOrdError):
    pass


class InvalidGraph(MarkedOrdError):
    pass
