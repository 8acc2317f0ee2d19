"""Exception hierarchy shared across the package.

DomainError covers failures of mathematical preconditions (CLI exit code 1);
InputError covers malformed problem documents (CLI exit code 2).
"""


class GaugedGWError(Exception):
    """Base class for all package errors."""


class DomainError(GaugedGWError):
    """A mathematically meaningful precondition failed."""


class InputError(GaugedGWError):
    """A problem document is malformed or violates its schema."""


class ArityMismatchError(DomainError):
    """Series with different degree-variable arities were combined."""


class RewriteFuelError(DomainError):
    """Monomial rewriting exceeded its fuel bound."""


class ZeroOneParameterSubgroupError(DomainError):
    """A weight was requested along the zero one-parameter subgroup."""


class NonDominantError(DomainError):
    """A filtration weight vector is not dominant (or is constant)."""


class EmptyModuliError(DomainError):
    """The requested moduli space is empty."""


class EnumerationBoundError(DomainError):
    """A combinatorial enumeration exceeded its configured bound."""


class InvalidTypeError(DomainError):
    """A scaled-curve combinatorial type failed validation."""


class SpecializationError(DomainError):
    """A symbolic expression was specialized onto a vanishing denominator."""
