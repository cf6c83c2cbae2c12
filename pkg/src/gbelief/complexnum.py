"""Complex scalars in rectangular form.

Phases are reported in the half-open interval ``(-pi, pi]``; the
negative-real axis always maps to ``+pi``, including for ``-0.0``
imaginary parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NegativeModulus, ZeroArgument


@dataclass(frozen=True, slots=True)
class ComplexScalar:
    re: float
    im: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(f"complex components must be finite, got ({self.re}, {self.im})")

    @classmethod
    def of(cls, value) -> ComplexScalar:
        """Coerce a ComplexScalar, builtin complex or real number."""
        if isinstance(value, ComplexScalar):
            return value
        value = complex(value)
        return cls(value.real, value.imag)

    def __add__(self, other: ComplexScalar) -> ComplexScalar:
        return add(self, other)

    def __sub__(self, other: ComplexScalar) -> ComplexScalar:
        return sub(self, other)

    def __mul__(self, other: ComplexScalar) -> ComplexScalar:
        return mul(self, other)

    def __neg__(self) -> ComplexScalar:
        return ComplexScalar(-self.re, -self.im)

    def __abs__(self) -> float:
        return modulus(self)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __bool__(self) -> bool:
        return self.re != 0.0 or self.im != 0.0

    def __str__(self) -> str:
        sign = "-" if math.copysign(1.0, self.im) < 0 else "+"
        return f"{self.re:g}{sign}{abs(self.im):g}i"

    def conjugate(self) -> ComplexScalar:
        return conjugate(self)

    def argument(self) -> float:
        return argument(self)

    def is_close(self, other: ComplexScalar, tol: float = 1e-12) -> bool:
        return abs(self.re - other.re) <= tol and abs(self.im - other.im) <= tol


ZERO = ComplexScalar(0.0, 0.0)
ONE = ComplexScalar(1.0, 0.0)


def add(z1: ComplexScalar, z2: ComplexScalar) -> ComplexScalar:
    return ComplexScalar(z1.re + z2.re, z1.im + z2.im)


def sub(z1: ComplexScalar, z2: ComplexScalar) -> ComplexScalar:
    return ComplexScalar(z1.re - z2.re, z1.im - z2.im)


def mul(z1: ComplexScalar, z2: ComplexScalar) -> ComplexScalar:
    return ComplexScalar(z1.re * z2.re - z1.im * z2.im, z1.re * z2.im + z2.re * z1.im)


def conjugate(z: ComplexScalar) -> ComplexScalar:
    return ComplexScalar(z.re, -z.im)


def modulus(z: ComplexScalar) -> float:
    return math.hypot(z.re, z.im)


def canonical_phase(theta: float) -> float:
    """Map an angle in ``[-pi, pi]`` onto ``(-pi, pi]``."""
    return math.pi if theta == -math.pi else theta


def argument(z: ComplexScalar) -> float:
    """Full-quadrant phase of ``z`` in ``(-pi, pi]``.

    Raises
    ------
    ZeroArgument
        If ``z`` is zero.
    """
    if not z:
        raise ZeroArgument("the phase of 0 is undefined")
    return canonical_phase(math.atan2(z.im, z.re))


def from_polar(r: float, theta: float) -> ComplexScalar:
    if r < 0:
        raise NegativeModulus(f"modulus must be non-negative, got {r}")
    return ComplexScalar(r * math.cos(theta), r * math.sin(theta))
