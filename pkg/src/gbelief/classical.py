"""Classical Dempster-Shafer mass, belief and plausibility.

This is the real-valued reference used to check that the generalized
functions reduce to their classical counterparts.
"""

from __future__ import annotations

import math
import random
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .frame import Frame, Proposition
from .validation import DEFAULT_TOLERANCE, ValidationReport, Violation, check_tolerance


@dataclass(frozen=True)
class ClassicalBBA:
    frame: Frame
    masses: Mapping[Proposition, float]

    def mass(self, a: Proposition) -> float:
        return self.masses.get(a, 0.0)

    def focal_elements(self) -> list[Proposition]:
        return sorted(self.masses)


def validate_bba(
    frame: Frame,
    entries: Iterable[tuple[Proposition, float]],
    tolerance: float = DEFAULT_TOLERANCE,
) -> ValidationReport:
    check_tolerance(tolerance)
    violations = []
    seen = set()
    values = []
    for a, m in entries:
        frame._check(a)
        m = float(m)
        if a in seen:
            violations.append(Violation("DuplicateEntry", a, m))
        seen.add(a)
        if not a:
            if m != 0.0:
                violations.append(Violation("EmptySetAssigned", a, m))
            continue
        if not (0.0 <= m <= 1.0 + tolerance) or not math.isfinite(m):
            violations.append(Violation("MagnitudeOutOfRange", a, m))
        values.append(m)
    total = math.fsum(values)
    if abs(total - 1.0) > tolerance:
        violations.append(Violation("SumNotUnity", None, (total, 0.0)))
    return ValidationReport(tuple(violations))


def build_bba(
    frame: Frame,
    entries: Iterable[tuple[Proposition, float]],
    tolerance: float = DEFAULT_TOLERANCE,
) -> ClassicalBBA:
    entries = [(a, float(m)) for a, m in entries]
    validate_bba(frame, entries, tolerance).raise_first()
    masses = {a: m for a, m in entries if a and m != 0.0}
    return ClassicalBBA(frame, MappingProxyType(dict(sorted(masses.items()))))


def classical_bel(bba: ClassicalBBA, a: Proposition) -> float:
    """Total mass of the non-empty subsets of ``a``."""
    bba.frame._check(a)
    return math.fsum(m for b, m in bba.masses.items() if b.bits & a.bits == b.bits)


def classical_pl(bba: ClassicalBBA, a: Proposition) -> float:
    """Total mass of the sets that intersect ``a``."""
    bba.frame._check(a)
    return math.fsum(m for b, m in bba.masses.items() if b.bits & a.bits)


def random_bba(frame: Frame, focal_count: int, seed: int) -> ClassicalBBA:
    """Seeded random BBA with ``focal_count`` distinct focal elements.

    Masses are normalized exponential draws; the masses sum to one up to
    rounding.
    """
    n_sets = (1 << frame.size) - 1
    if not 1 <= focal_count <= n_sets:
        raise ValueError(f"focal_count must lie in [1, {n_sets}], got {focal_count}")
    rng = random.Random(seed)
    focal = rng.sample(range(1, n_sets + 1), focal_count)
    weights = [rng.expovariate(1.0) for _ in focal]
    total = math.fsum(weights)
    return build_bba(frame, [(frame.from_bits(b), w / total) for b, w in zip(focal, weights)])
