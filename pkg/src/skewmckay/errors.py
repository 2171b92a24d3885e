"""Exception types shared across the package."""

from __future__ import annotations


class SkewMckayError(Exception):
    """Base class for all package errors."""


class ZeroModulus(SkewMckayError, ValueError):
    """The root-of-unity modulus must be a positive integer."""


class BadVectorLength(SkewMckayError, ValueError):
    """A generator vector does not have the ambient dimension."""


class NotSpecialLinear(SkewMckayError, ValueError):
    """A generator's exponent sum is nonzero mod M (determinant != 1)."""


class GroupTooLarge(SkewMckayError):
    """Closure enumeration exceeded the configured order cap."""


class IndexOutOfRange(SkewMckayError, IndexError):
    """A coordinate index lies outside 1..n."""


class NotASubgroup(SkewMckayError, ValueError):
    """The given subgroup does not belong to the given group."""


class DimensionMismatch(SkewMckayError, ValueError):
    """A monomial's exponent vector does not match the ambient dimension."""


class NotFullQuiver(SkewMckayError, ValueError):
    """The operation needs the full McKay quiver, not a subquiver."""


class GroupMismatch(SkewMckayError, ValueError):
    """Two basis elements live over different groups."""


class SupportViolation(SkewMckayError, ValueError):
    """A monomial uses variables outside the allowed fixed coordinates."""


class VerificationFailed(SkewMckayError):
    """An exactness check failed; carries (vertex, degree, position)."""

    def __init__(self, vertex, degree, position):
        self.vertex = vertex
        self.degree = degree
        self.position = position
        super().__init__(
            f"exactness failed at vertex {vertex}, degree {degree}, position {position}"
        )


class BoundExceeded(SkewMckayError):
    """The nilpotency exponent search passed its cap without an answer."""


class SchemaError(SkewMckayError, ValueError):
    """An input file does not match the expected JSON schema."""


class IoError(SkewMckayError, OSError):
    """A file or directory could not be read or written."""


class GoldenMismatch(SkewMckayError):
    """A regenerated artifact differs from the stored golden copy."""

    def __init__(self, name: str, diff: str):
        self.name = name
        self.diff = diff
        super().__init__(f"golden mismatch in {name}\n{diff}")
