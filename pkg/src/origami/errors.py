"""Exception types shared across the package."""


class OrigamiError(Exception):
    """Base class for all validation and computation errors."""


class SizeMismatch(OrigamiError):
    """The two permutations of an origami act on different numbers of squares."""


class Disconnected(OrigamiError):
    """The group generated by the two permutations is not transitive."""


class OrbitLimitExceeded(OrigamiError):
    """Orbit enumeration exceeded the configured vertex cap."""


class NotPrimitive(OrigamiError):
    """A direction vector (p, q) with gcd(|p|, |q|) != 1 was supplied."""


class DegenerateFrame(OrigamiError):
    """A re-orthonormalization step produced a zero diagonal entry."""
