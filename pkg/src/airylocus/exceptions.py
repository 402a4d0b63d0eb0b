"""Error types raised by the numerical layers.

Every failure mode that callers are expected to handle gets its own class so
the CLI can map them onto its exit-code contract (3 = numerical failure).
"""


class AiryLocusError(Exception):
    """Base class for all package-specific failures."""


class UnscaledOverflow(AiryLocusError):
    """An unscaled function value was requested but exceeds double range."""


class NonConvergence(AiryLocusError):
    """A series or iteration failed to reach its stopping rule."""


class SectorViolation(AiryLocusError):
    """A raw asymptotic expansion was requested outside its validity sector."""


class BracketingFailure(AiryLocusError):
    """A sign-change scan could not isolate the requested real zeros."""


class SeedDivergence(AiryLocusError):
    """Newton refinement left the neighbourhood of its seed."""


class ContourThroughRoot(AiryLocusError):
    """A counting contour kept passing through a zero after all retries."""


class MaxCountExceeded(AiryLocusError):
    """More eigenvalues were found than the caller's stated maximum."""


class Unstable(AiryLocusError):
    """Multiplicity counts failed to stabilise over shrinking circles."""


class BranchLost(AiryLocusError):
    """Continuation could not follow an eigenvalue branch any further."""


class NotABranch(AiryLocusError):
    """The requested branch index does not exist at the starting parameter."""


class DriftUnrecoverable(AiryLocusError):
    """Reprojection onto a traced curve failed to reconverge."""
