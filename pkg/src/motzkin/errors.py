"""Exception hierarchy.

Every domain error derives from :class:`MotzkinError`, so callers (and the CLI)
can report the class name without caring about the particular failure.
"""


class MotzkinError(ValueError):
    pass


class IndexOutOfRange(MotzkinError):
    pass


class DegreeViolation(MotzkinError):
    pass


class CrossingEdges(MotzkinError):
    pass


class WidthMismatch(MotzkinError):
    pass


class NotARookDiagram(MotzkinError):
    pass


class NotARookMatrix(MotzkinError):
    pass


class InvalidLetter(MotzkinError):
    pass


class ParseError(MotzkinError):
    pass


class CatalogValidationFailure(MotzkinError):
    pass


class BoundExceeded(MotzkinError):
    pass


class NotInRP(MotzkinError):
    pass


class NotInTL(MotzkinError):
    pass


class InvalidBallot(MotzkinError):
    pass


class BadIndices(MotzkinError):
    pass


class LetterOutOfRange(MotzkinError):
    pass


class NonTermination(MotzkinError):
    pass


class RewriteMismatch(MotzkinError):
    """A rewrite step was requested where its left-hand side does not occur."""
