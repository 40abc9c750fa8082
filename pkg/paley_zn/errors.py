# paley_zn/errors.py
"""Exception hierarchy shared by the library and the command-line front end."""


class PaleyError(Exception):
    """Base class for every domain error raised by paley_zn."""

    exit_code = 1


class InvalidModulus(PaleyError):
    """A modulus does not satisfy the constructor's preconditions."""


class NotAdmissible(PaleyError):
    """-1 is not the square of a unit modulo n, so G_n is not defined."""


class NotOneMod4(PaleyError):
    """The prime is not congruent to 1 modulo 4."""


class MappingFailure(PaleyError):
    """a^(phi(n)/2) mod n fell outside {1, n-1} for a unit a."""


class ModulusMismatch(PaleyError):
    """Two characters were combined over different moduli."""


class NonUnitShift(PaleyError):
    """A shift parameter that must be a unit is divisible by p."""


class NotASquare(PaleyError):
    """An affine multiplier is not a unit square."""


class TooLarge(PaleyError):
    """An O(n^2) enumeration was requested beyond the configured guard."""


class IdentityViolation(PaleyError, AssertionError):
    """A closed-form identity or divisibility postcondition failed.

    This is a correctness bug, never a user error.
    """

    exit_code = 3
