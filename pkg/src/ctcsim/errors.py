"""Exception types shared across the package."""

__all__ = [
    "DomainError",
    "SingularityError",
    "CTCConditionError",
    "InconsistentAssemblyError",
]


class DomainError(ValueError):
    """An input lies outside the domain where a formula is defined."""


class SingularityError(DomainError):
    """An input sits on a pole or degenerate locus of a formula."""


class CTCConditionError(ValueError):
    """The requested parameters do not produce a closed timelike curve."""


class InconsistentAssemblyError(ValueError):
    """The two scattering images of a surface assembly never meet."""
