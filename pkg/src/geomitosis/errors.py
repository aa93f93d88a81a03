"""Exception types shared across the package.

The CLI maps these onto exit codes: `DomainError`/`FormatError` -> 2,
`CapacityError` -> 3.
"""


class DomainError(ValueError):
    """Input outside the domain of an operation (bad index, bad cell, ...)."""


class FormatError(ValueError):
    """Malformed textual or JSON input."""


class CapacityError(RuntimeError):
    """Input exceeds the desk-scale budget of a brute-force routine."""


class NotAdmissibleError(DomainError):
    """A face of the facet P has no unique expansion into the Cayley sum."""
