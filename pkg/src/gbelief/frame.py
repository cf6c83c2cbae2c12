"""Frames of discernment and propositions encoded as bitmasks.

Bit ``i`` of a proposition is set when the ``i``-th label of the frame (in
declared order) belongs to the subset.  Ordering propositions by their
integer mask gives the canonical table order used everywhere else.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .errors import FrameMismatch, FrameTooLarge, UnknownLabel

MAX_FRAME_SIZE = 24
MAX_TABLE_FRAME_SIZE = 20


@dataclass(frozen=True, order=True, slots=True)
class Proposition:
    """A subset of a frame with ``width`` elements."""

    bits: int
    width: int

    def __post_init__(self):
        if not 0 <= self.width <= MAX_FRAME_SIZE:
            raise FrameTooLarge(f"width {self.width} outside [0, {MAX_FRAME_SIZE}]")
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError(f"bits {self.bits:#x} do not fit in width {self.width}")

    def __and__(self, other: Proposition) -> Proposition:
        return intersect(self, other)

    def __or__(self, other: Proposition) -> Proposition:
        return union(self, other)

    def __invert__(self) -> Proposition:
        return Proposition(self.bits ^ ((1 << self.width) - 1), self.width)

    def __len__(self) -> int:
        return cardinality(self)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[int]:
        """Iterate over the indices of the member elements, ascending."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __repr__(self) -> str:
        return f"Proposition({self.bits:0{max(self.width, 1)}b})"


@dataclass(frozen=True)
class Frame:
    """An ordered frame of discernment."""

    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise ValueError("a frame needs at least one label")
        if len(labels) > MAX_FRAME_SIZE:
            raise FrameTooLarge(f"frame has {len(labels)} labels, limit is {MAX_FRAME_SIZE}")
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ValueError(f"labels must be non-empty strings, got {label!r}")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in {labels!r}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(labels)})

    @classmethod
    def of_size(cls, n: int) -> Frame:
        """Frame with labels ``a``, ``b``, ... (``x`` is the 24th)."""
        if not 1 <= n <= MAX_FRAME_SIZE:
            raise FrameTooLarge(f"frame size {n} outside [1, {MAX_FRAME_SIZE}]")
        return cls(chr(ord("a") + i) for i in range(n))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def empty(self) -> Proposition:
        return Proposition(0, self.size)

    @property
    def full(self) -> Proposition:
        return Proposition((1 << self.size) - 1, self.size)

    def proposition(self, labels: Iterable[str]) -> Proposition:
        return parse_proposition(self, labels)

    def from_bits(self, bits: int) -> Proposition:
        return Proposition(bits, self.size)

    def labels_of(self, a: Proposition) -> list[str]:
        self._check(a)
        return [self.labels[i] for i in a]

    def contains(self, a: Proposition) -> bool:
        return a.width == self.size

    def _check(self, a: Proposition) -> None:
        if a.width != self.size:
            raise FrameMismatch(f"{a!r} does not belong to a frame of size {self.size}")


def parse_proposition(frame: Frame, labels: Iterable[str]) -> Proposition:
    bits = 0
    for label in labels:
        try:
            bits |= 1 << frame._index[label]
        except KeyError:
            raise UnknownLabel(label) from None
    return Proposition(bits, frame.size)


def _same_width(a: Proposition, b: Proposition) -> None:
    if a.width != b.width:
        raise FrameMismatch(f"cannot combine {a!r} and {b!r}")


def complement(frame: Frame, a: Proposition) -> Proposition:
    frame._check(a)
    return ~a


def intersect(a: Proposition, b: Proposition) -> Proposition:
    _same_width(a, b)
    return Proposition(a.bits & b.bits, a.width)


def union(a: Proposition, b: Proposition) -> Proposition:
    _same_width(a, b)
    return Proposition(a.bits | b.bits, a.width)


def is_subset(a: Proposition, b: Proposition) -> bool:
    _same_width(a, b)
    return a.bits & b.bits == a.bits


def cardinality(a: Proposition) -> int:
    return bin(a.bits).count("1")


def powerset(frame: Frame) -> Iterator[Proposition]:
    """Yield all ``2**N`` propositions in ascending mask order."""
    n = frame.size
    if n > MAX_FRAME_SIZE:
        raise FrameTooLarge(f"frame size {n} exceeds {MAX_FRAME_SIZE}")
    return (Proposition(bits, n) for bits in range(1 << n))


def submasks(bits: int) -> Iterator[int]:
    """Yield every submask of ``bits`` (including ``bits`` and 0), descending."""
    sub = bits
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & bits


def require_table_size(frame: Frame, limit: int = MAX_TABLE_FRAME_SIZE) -> None:
    if frame.size > limit:
        raise FrameTooLarge(f"frame size {frame.size} exceeds the limit of {limit} for this operation")

