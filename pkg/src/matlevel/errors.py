"""Exception types shared across the package."""


class MatlevelError(Exception):
    """Base class for all library errors."""


class MixedCardinality(MatlevelError):
    """Basis family contains sets of different sizes."""


class ExchangeViolation(MatlevelError):
    """Basis exchange fails; carries a witnessing triple (B1, B2, x)."""

    def __init__(self, b1, b2, x):
        self.witness = (frozenset(b1), frozenset(b2), x)
        super().__init__(
            f"exchange fails for B1={sorted(b1)}, B2={sorted(b2)}, x={x}"
        )


class UnknownName(MatlevelError):
    """Catalog name not recognized."""


class NotConnected(MatlevelError):
    """Operation requires a connected matroid."""


class SizeLimit(MatlevelError):
    """Input exceeds the supported exhaustive-search size."""


class BasePointColoop(MatlevelError):
    """Series connection base point is a coloop of both parts."""


class BasePointLoop(MatlevelError):
    """Parallel connection base point is a loop of both parts."""


class BasePointDegenerate(MatlevelError):
    """2-sum base point is a loop or coloop of one of the parts."""


class DuplicatePoints(MatlevelError):
    """Point configuration contains repeated points."""


class PointInV(MatlevelError):
    """Separation degree asked for a point that lies in the configuration."""


class NonNegativeAtP(MatlevelError):
    """Separation witness point does not violate the facet inequality."""


class NegativeOnV(MatlevelError):
    """Linear function is negative somewhere on the configuration."""


class UnsupportedEntry(MatlevelError):
    """Slack entry outside {0, 1, 2, 4}; square roots leave Q(sqrt2)."""


class InconclusiveVerdict(MatlevelError):
    """Search budget exhausted without a definite verdict."""


class ParseError(MatlevelError):
    """Unparseable matroid/graph input."""
