"""Exception hierarchy.

Every error raised on bad user input derives from :class:`SwknotError`, so the
command line front end can map all of them to exit status 1.
"""


class SwknotError(ValueError):
    """Base class for domain errors (bad knot data, violated preconditions)."""


class ParseError(SwknotError):
    pass


class NotAlexanderError(SwknotError):
    """Raised when a polynomial cannot be an Alexander polynomial of a knot."""


class NotFiberedError(SwknotError):
    """Raised when the Alexander polynomial fails the monicity screen."""


class BraidError(SwknotError):
    pass


class SeifertError(SwknotError):
    pass


class LatticeError(SwknotError):
    pass


class NotApplicableError(SwknotError):
    """Raised when a criterion is vacuous for the given input."""


class InternalConsistencyError(ArithmeticError):
    """An identity that must hold exactly did not (a bug or corrupt input)."""
