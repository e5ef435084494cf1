"""Exception types shared across the engine.

Every error raised by this package derives from :class:`EigenrankError`,
so callers can catch one base class at API boundaries.  Validation of
hierarchies and networks deliberately does NOT raise -- those operations
return reports -- but malformed inputs to computations do.
"""

from __future__ import annotations


class EigenrankError(Exception):
    """Base class for all errors raised by this package."""


# --- judgment / matrix construction ---------------------------------------

class DuplicateLabel(EigenrankError):
    """An element id appears more than once in a label sequence."""


class UnknownElement(EigenrankError):
    """A judgment or query references an id outside the label set."""


class SelfComparison(EigenrankError):
    """A judgment compares an element against itself; the diagonal is fixed at 1."""


class MissingPair(EigenrankError):
    """The judgment set does not cover every unordered pair."""

    def __init__(self, missing):
        self.missing = tuple(missing)
        pairs = ", ".join(f"({a}, {b})" for a, b in self.missing)
        super().__init__(f"missing judgments for pairs: {pairs}")


class DuplicatePair(EigenrankError):
    """The same unordered pair was judged more than once."""


class NonPositiveValue(EigenrankError):
    """A judgment value must be a strictly positive finite real."""


class ReciprocityViolation(EigenrankError):
    """An input matrix fails a_ij * a_ji = 1 beyond tolerance."""


class InvalidRho(EigenrankError):
    """Homogeneity bound rho must satisfy rho >= 1."""


# --- priority derivation ----------------------------------------------------

class NoConvergence(EigenrankError):
    """Iteration budget exhausted before the tolerance was met.

    Carries the last iterate so callers can inspect how far it got.
    """

    def __init__(self, message, last_iterate=None, iterations=0):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.iterations = iterations


class DimensionMismatch(EigenrankError):
    """Two inputs that must share labels or shape do not."""


# --- structures -------------------------------------------------------------

class UnknownNode(EigenrankError):
    """A node id is not part of the hierarchy."""


class LabelMismatch(EigenrankError):
    """A comparison matrix does not cover exactly the expected elements."""


class MissingMatrix(EigenrankError):
    """No comparison matrix was supplied for a required context."""


class InvalidHierarchy(EigenrankError):
    """Composition was asked to run on a hierarchy that fails validation."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"hierarchy fails validation: {report.summary()}")


class InvalidNetwork(EigenrankError):
    """Supermatrix assembly was asked to run on a network that fails validation."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"network fails validation: {report.summary()}")


class BadClusterWeights(EigenrankError):
    """Cluster weights must cover the contributing components and sum to 1."""


class NotColumnStochastic(EigenrankError):
    """The supermatrix has a nonzero column that does not sum to 1."""


# --- set comparisons --------------------------------------------------------

class ElementInBothSides(EigenrankError):
    """A set comparison places the same element on both sides."""


# --- sessions / documents ---------------------------------------------------

class ParseError(EigenrankError):
    """A model document could not be parsed.

    Carries every problem found, not just the first, so callers can
    report the whole list in one round trip.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = tuple(problems)
        super().__init__("; ".join(self.problems) or "unparseable document")


class ValidationFailed(EigenrankError):
    """A model document parsed but its structure fails validation."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"structure fails validation: {report.summary()}")


class UnknownSession(EigenrankError):
    """No session with the given id exists."""


class UnknownContext(EigenrankError):
    """The session has no judgment context with the given id."""


class UnknownPair(EigenrankError):
    """The pair does not belong to the context's element set."""


class InvalidAction(EigenrankError):
    """A what-if action is unknown or its payload is malformed."""
