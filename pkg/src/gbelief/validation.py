"""Validation reports shared by the classical and complex mass builders."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

from . import errors
from .frame import Proposition

DEFAULT_TOLERANCE = 1e-9


class Violation(NamedTuple):
    condition: str
    where: Proposition | None  # None for global conditions such as the sum
    value: Any


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def raise_first(self) -> None:
        """Raise the exception matching the first violation, if any."""
        if self.ok:
            return
        first = self.violations[0]
        exc = getattr(errors, first.condition)
        where = "global" if first.where is None else repr(first.where)
        raise exc(f"{first.condition} at {where}: {first.value}", report=self)


def check_tolerance(tolerance: float) -> None:
    if not tolerance > 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
