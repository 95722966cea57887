"""Exception types shared across the package.

Every error carries a stable ``code`` string so the CLI can emit
machine-readable error reports.
"""

from __future__ import annotations


class KnotShadowsError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class MalformedCode(KnotShadowsError):
    """A crossing code is structurally invalid (a label does not occur exactly twice, etc.)."""


class NotRealizable(KnotShadowsError):
    """The double-occurrence word is not the trace of any closed curve on the sphere."""


class LengthMismatch(KnotShadowsError):
    """An over/under choice vector does not match the crossing count."""


class ResourceLimit(KnotShadowsError):
    """A configured crossing ceiling would be exceeded."""


class ZeroPolynomial(KnotShadowsError):
    """Degree data requested for the zero polynomial."""


class ParseError(KnotShadowsError):
    """A table or input file failed to parse; the message names the offending line."""


class DuplicateName(KnotShadowsError):
    """Two table records share a name."""


class TableInsufficient(KnotShadowsError):
    """The loaded knot table does not cover the crossing range a predicate needs."""


class MissingAnnotation(KnotShadowsError):
    """A verifier needs an exact invariant that the table does not annotate."""


class EmptySet(KnotShadowsError):
    """A statistic was requested over an empty diagram set."""
