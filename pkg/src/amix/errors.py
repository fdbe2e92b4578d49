"""Exception types shared across the package."""


class AmixError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(AmixError, ValueError):
    """A constructor or operation received an out-of-range argument."""


class EdgeListError(AmixError, ValueError):
    """An edge-list document is malformed or references invalid vertices."""


class SizeLimitError(AmixError, ValueError):
    """An input exceeds the size this desk-scale tool supports."""


class EigensolverError(AmixError, RuntimeError):
    """The dense symmetric eigensolver failed to converge."""


class DistributionError(AmixError, ValueError):
    """A sampling distribution violates its invariants or JSON schema."""


class DepthExceededError(DistributionError):
    """Distribution nesting is deeper than the supported limit."""


class UnsupportedDistributionError(DistributionError):
    """The requested operation is undefined for this distribution."""


class UnsolvedError(AmixError):
    """No distribution of the requested family meets the gap targets."""


class UnrealizableError(AmixError):
    """No cosine-product distribution can realize the gap targets."""
