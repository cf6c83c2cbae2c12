"""Complex basic belief assignments (CBBAs).

A CBBA maps each non-empty proposition to a complex mass whose modulus lies
in ``[0, 1]``; the masses sum to ``1 + 0i``.  Only non-zero masses are
stored.  The commitment degree of a proposition is its magnitude divided by
the total magnitude of all focal elements, which turns the complex
assignment into a real-valued one that belief and plausibility are built
from.
"""

from __future__ import annotations

import math
import random
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType

from .classical import ClassicalBBA, build_bba
from .complexnum import ZERO, ComplexScalar, argument, modulus
from .errors import EmptyProposition, NotClassical, Unsatisfiable, ZeroMassPhase
from .frame import Frame, Proposition
from .validation import DEFAULT_TOLERANCE, ValidationReport, Violation, check_tolerance

CLASSICAL_IMAG_TOL = 1e-12
MAX_RANDOM_ATTEMPTS = 1000


@dataclass(frozen=True, eq=False)
class CBBA:
    frame: Frame
    masses: Mapping[Proposition, ComplexScalar]

    def mass(self, a: Proposition) -> ComplexScalar:
        self.frame._check(a)
        return self.masses.get(a, ZERO)

    def magnitude(self, a: Proposition) -> float:
        return modulus(self.mass(a))

    def phase(self, a: Proposition) -> float:
        z = self.mass(a)
        if not z:
            raise ZeroMassPhase(f"{a!r} has zero mass, its phase is undefined")
        return argument(z)

    def focal_elements(self) -> list[Proposition]:
        return list(self.masses)

    @cached_property
    def _total_magnitude(self) -> float:
        return math.fsum(modulus(z) for z in self.masses.values())

    def total_magnitude(self) -> float:
        return self._total_magnitude

    @cached_property
    def commitments(self) -> Mapping[Proposition, float]:
        """Commitment degree of every focal element."""
        total = self._total_magnitude
        return MappingProxyType({a: modulus(z) / total for a, z in self.masses.items()})

    @cached_property
    def commitments_by_bits(self) -> Mapping[int, float]:
        return MappingProxyType({a.bits: c for a, c in self.commitments.items()})

    def commitment(self, a: Proposition, strict: bool = False) -> float:
        """Magnitude of ``a`` relative to the total magnitude.

        The empty set has commitment 0 unless ``strict`` is set, in which case
        asking for it raises :class:`EmptyProposition`.
        """
        self.frame._check(a)
        if strict and not a:
            raise EmptyProposition("commitment is only defined for non-empty propositions")
        return self.commitments.get(a, 0.0)

    def is_classical(self) -> bool:
        return all(abs(z.im) <= CLASSICAL_IMAG_TOL and z.re >= 0.0 for z in self.masses.values())

    def to_classical(self) -> ClassicalBBA:
        if not self.is_classical():
            raise NotClassical("masses have non-zero imaginary or negative real parts")
        return build_bba(self.frame, [(a, z.re) for a, z in self.masses.items()])

    def items(self):
        return self.masses.items()

    def __eq__(self, other):
        if not isinstance(other, CBBA):
            return NotImplemented
        return self.frame == other.frame and dict(self.masses) == dict(other.masses)

    def __repr__(self):
        body = ", ".join(
            "{" + ",".join(self.frame.labels_of(a)) + "}: " + str(z) for a, z in self.masses.items()
        )
        return f"CBBA({body})"


def validate(
    frame: Frame,
    entries: Iterable[tuple[Proposition, ComplexScalar]],
    tolerance: float = DEFAULT_TOLERANCE,
) -> ValidationReport:
    """Check every defining condition and report all violations found."""
    check_tolerance(tolerance)
    violations = []
    seen = set()
    res, ims = [], []
    for a, z in entries:
        frame._check(a)
        z = ComplexScalar.of(z)
        if a in seen:
            violations.append(Violation("DuplicateEntry", a, z))
        seen.add(a)
        if not a:
            if z:
                violations.append(Violation("EmptySetAssigned", a, z))
            continue
        if modulus(z) > 1.0 + tolerance:
            violations.append(Violation("MagnitudeOutOfRange", a, modulus(z)))
        res.append(z.re)
        ims.append(z.im)
    total = ComplexScalar(math.fsum(res), math.fsum(ims))
    if abs(total.re - 1.0) > tolerance or abs(total.im) > tolerance:
        violations.append(Violation("SumNotUnity", None, (total.re, total.im)))
    return ValidationReport(tuple(violations))


def build_cbba(
    frame: Frame,
    entries: Iterable[tuple[Proposition, ComplexScalar]],
    tolerance: float = DEFAULT_TOLERANCE,
) -> CBBA:
    """Validate ``entries`` and build a CBBA; exact zeros are dropped.

    Raises the :class:`~gbelief.errors.InvalidMass` subclass named by the
    first violation; the exception's ``report`` lists all of them.
    """
    entries = [(a, ComplexScalar.of(z)) for a, z in entries]
    validate(frame, entries, tolerance).raise_first()
    masses = sorted((a, z) for a, z in entries if a and z)
    return CBBA(frame, MappingProxyType(dict(masses)))


def from_classical(bba: ClassicalBBA) -> CBBA:
    """Embed a classical BBA as a CBBA with real masses."""
    return CBBA(bba.frame, MappingProxyType({a: ComplexScalar(m, 0.0) for a, m in bba.masses.items()}))


def _disc_sample(rng: random.Random, radius: float) -> ComplexScalar:
    r = radius * math.sqrt(rng.random())
    theta = rng.uniform(-math.pi, math.pi)
    return ComplexScalar(r * math.cos(theta), r * math.sin(theta))


def random_cbba(frame: Frame, focal_count: int, seed: int) -> CBBA:
    """Seeded random CBBA with exactly ``focal_count`` focal elements.

    ``focal_count - 1`` masses are drawn uniformly from the disc of radius
    ``1 / focal_count`` and the last mass closes the sum to ``1 + 0i``.
    Draws are rejected when that last mass has modulus above 1 or any mass
    is zero.
    """
    n_sets = (1 << frame.size) - 1
    if not 1 <= focal_count <= n_sets:
        raise Unsatisfiable(f"focal_count must lie in [1, {n_sets}], got {focal_count}")
    rng = random.Random(seed)
    focal = rng.sample(range(1, n_sets + 1), focal_count)
    radius = 1.0 / focal_count
    for _ in range(MAX_RANDOM_ATTEMPTS):
        draws = [_disc_sample(rng, radius) for _ in range(focal_count - 1)]
        last = ComplexScalar(1.0 - math.fsum(z.re for z in draws), -math.fsum(z.im for z in draws))
        if modulus(last) > 1.0 or not last or not all(draws):
            continue
        entries = [(frame.from_bits(b), z) for b, z in zip(focal, draws + [last])]
        return build_cbba(frame, entries)
    raise Unsatisfiable(f"no valid draw after {MAX_RANDOM_ATTEMPTS} attempts")
