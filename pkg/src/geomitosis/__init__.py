"""Simple geometric mitosis on Cayley sums, pipe dreams and Gelfand-Zetlin polytopes."""

from geomitosis.errors import CapacityError, DomainError, FormatError, NotAdmissibleError

__version__ = "0.1.0"

__all__ = ["CapacityError", "DomainError", "FormatError", "NotAdmissibleError"]
