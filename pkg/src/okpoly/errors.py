"""Exception hierarchy shared by all okpoly modules.

The CLI maps these onto exit codes; library users catch them directly.
"""


class OkpolyError(Exception):
    """Base class for all errors raised by okpoly."""


class ParseError(OkpolyError):
    """Malformed input file or expression (bad JSON, bad divisor/flag spec)."""


class ValidationError(OkpolyError):
    """Structurally well-formed input that violates a model invariant."""


class DomainError(OkpolyError):
    """Operation called outside its mathematical domain."""


class NoRealRootError(DomainError):
    """Quadratic with negative discriminant passed to a real root solver."""


class NotPseudoeffectiveError(DomainError):
    """Zariski decomposition failed: the class is not pseudoeffective in the model."""


class ModelInconsistencyError(OkpolyError):
    """The declared curve data contradicts itself along a computation.

    Typical causes: the flag curve re-enters a negative part, a support
    fails to stabilise after a wall, or fixture expectations do not match.
    """


class UnsupportedFeatureError(OkpolyError):
    """Requested geometry the engine deliberately does not model."""


class DegenerateTowerError(DomainError):
    """Tower closed forms have a vanishing denominator for these invariants."""
