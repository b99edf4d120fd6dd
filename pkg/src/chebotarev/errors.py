"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain a formula is stated for."""


class PoleError(DomainError):
    """Evaluation requested at a genuine pole."""


class NumericError(RuntimeError):
    """A numerical routine failed to converge or lost its bracket."""


class SearchError(NumericError):
    """A constrained parameter search found no admissible point."""


class ResourceError(RuntimeError):
    """A computation would exceed a configured resource limit."""
