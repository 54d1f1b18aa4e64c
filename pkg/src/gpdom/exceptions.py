"""Exception types raised across the package."""


class GPDomError(Exception):
    """Base class for all package errors."""


class InvalidParams(GPDomError, ValueError):
    """The (n, k[, c]) triple does not describe a simple generalized Petersen graph."""


class UnsupportedParams(GPDomError, ValueError):
    """Parameters are valid but outside the hypothesis of the requested construction."""


class NotApplicable(GPDomError, ValueError):
    """The requested operation does not apply to this graph or set."""


class NotFactored(GPDomError, ValueError):
    """The graph was built without the n = c*k factorization."""


class TranscriptionError(GPDomError, RuntimeError):
    """Two construction blocks produced the same vertex.

    The cardinality bookkeeping of every construction assumes its blocks are
    disjoint, so an overlap means a block generator is wrong.
    """


class LemmaViolation(GPDomError, AssertionError):
    """A structural audit check failed on a dominating set."""

    def __init__(self, message, reproducer):
        super().__init__(message)
        self.reproducer = reproducer
