# paley_zn/gaussian.py
"""Exact Gaussian integers a + bi, the value domain of quartic characters."""
from dataclasses import dataclass


@dataclass(frozen=True)
class GaussianInt:
    """An exact Gaussian integer re + im*i."""

    re: int
    im: int = 0

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GaussianInt):
            return other
        if isinstance(other, int):
            return cls(other, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __pow__(self, exp):
        if exp < 0:
            raise ValueError("negative powers are not Gaussian integers")
        result = ONE
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def conjugate(self):
        return GaussianInt(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __int__(self):
        if self.im:
            raise ValueError(f"{self} is not a rational integer")
        return self.re

    def __str__(self):
        # "a+bi" / "a-bi", no spaces
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)

# i^q for q = 0..3
I_POWERS = (ONE, I, -ONE, -I)
