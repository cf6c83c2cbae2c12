"""Generalized belief and plausibility over the subset lattice.

Pointwise queries enumerate subsets directly.  Whole-table operations use
the in-place per-bit sweep: for every bit ``i`` (ascending) and every mask
containing ``i``, ``acc[mask] += acc[mask ^ (1 << i)]`` for the zeta
(subset-sum) transform, and ``-=`` for its Möbius inverse.  Each sweep is
vectorized over a ``(-1, 2, 2**i)`` view of the table, which fixes the
summation order and makes results bit-for-bit reproducible.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from .cbba import CBBA
from .errors import FrameTooLarge, InvalidTable
from .frame import MAX_TABLE_FRAME_SIZE, Frame, Proposition, require_table_size, submasks

NAIVE_FRAME_LIMIT = 14
AXIOM3_MAX_SETS = 20
TABLE_SLACK = 1e-12
UNITY_TOL = 1e-9


class TableKind(str, Enum):
    COMMITMENT = "commitment"
    BELIEF = "belief"
    PLAUSIBILITY = "plausibility"


@dataclass(frozen=True, eq=False)
class BeliefTable:
    """Dense table of one set function, indexed by proposition mask."""

    frame: Frame
    values: np.ndarray
    kind: TableKind

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.shape != (1 << self.frame.size,):
            raise InvalidTable(f"expected {1 << self.frame.size} values, got shape {values.shape}")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "kind", TableKind(self.kind))

    def __getitem__(self, a: Proposition) -> float:
        self.frame._check(a)
        return float(self.values[a.bits])

    def __len__(self) -> int:
        return len(self.values)

    def check(self, slack: float = TABLE_SLACK, unity_tol: float = UNITY_TOL) -> None:
        """Raise :class:`InvalidTable` unless the table satisfies its invariants."""
        v = self.values
        if v[0] != 0.0:
            raise InvalidTable(f"{self.kind.value} of the empty set is {float(v[0])!r}, expected 0")
        if self.kind is not TableKind.COMMITMENT and abs(v[-1] - 1.0) > unity_tol:
            raise InvalidTable(f"{self.kind.value} of the full frame is {float(v[-1])!r}, expected 1")
        if not np.all(np.isfinite(v)):
            raise InvalidTable("table contains non-finite values")
        lo, hi = float(v.min()), float(v.max())
        if lo < -slack or hi > 1.0 + slack:
            raise InvalidTable(f"values span [{lo!r}, {hi!r}], outside [0, 1]")


def zeta_transform(values: np.ndarray) -> np.ndarray:
    """Subset sums ``out[A] = sum(values[B] for B subset of A)``."""
    acc = np.array(values, dtype=np.float64)
    n = _table_bits(acc)
    for i in range(n):
        view = acc.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return acc


def mobius_transform(values: np.ndarray) -> np.ndarray:
    """Inverse of :func:`zeta_transform`."""
    acc = np.array(values, dtype=np.float64)
    n = _table_bits(acc)
    for i in range(n):
        view = acc.reshape(-1, 2, 1 << i)
        view[:, 1, :] -= view[:, 0, :]
    return acc


def naive_mobius(values: np.ndarray) -> np.ndarray:
    """Literal alternating sum ``sum((-1)**|A - B| * values[B] for B subset of A)``.

    Costs ``3**N`` terms and is refused above ``N = 14``.
    """
    values = np.asarray(values, dtype=np.float64)
    n = _table_bits(values)
    _require_naive(n)
    out = np.empty_like(values)
    for a in range(len(values)):
        out[a] = math.fsum(
            -values[b] if bin(a & ~b).count("1") & 1 else values[b] for b in submasks(a)
        )
    return out


def _table_bits(values: np.ndarray) -> int:
    size = len(values)
    n = size.bit_length() - 1
    if size != 1 << n:
        raise InvalidTable(f"table length {size} is not a power of two")
    if n > MAX_TABLE_FRAME_SIZE:
        raise FrameTooLarge(f"table over {n} elements exceeds the limit of {MAX_TABLE_FRAME_SIZE}")
    return n


def _require_naive(n: int) -> None:
    if n > NAIVE_FRAME_LIMIT:
        raise FrameTooLarge(
            f"the naive path costs 3**N operations and is limited to N <= {NAIVE_FRAME_LIMIT}, got {n}"
        )


# -- pointwise ---------------------------------------------------------------


def gbel(cbba: CBBA, a: Proposition) -> float:
    """Generalized belief: total commitment of the non-empty subsets of ``a``."""
    cbba.frame._check(a)
    com = cbba.commitments_by_bits
    return math.fsum(com.get(b, 0.0) for b in submasks(a.bits) if b)


def gpl(cbba: CBBA, a: Proposition) -> float:
    """Generalized plausibility, ``1 - gbel(complement of a)``; 0 for the empty set."""
    if not a:
        cbba.frame._check(a)
        return 0.0
    return 1.0 - gbel(cbba, ~a)


def gpl_direct(cbba: CBBA, a: Proposition) -> float:
    """Plausibility as the total commitment of the sets that intersect ``a``."""
    cbba.frame._check(a)
    return math.fsum(c for b, c in cbba.commitments_by_bits.items() if b & a.bits)


# -- whole tables ------------------------------------------------------------


def commitment_table(cbba: CBBA) -> BeliefTable:
    require_table_size(cbba.frame)
    values = np.zeros(1 << cbba.frame.size)
    for b, c in cbba.commitments_by_bits.items():
        values[b] = c
    return BeliefTable(cbba.frame, values, TableKind.COMMITMENT)


def gbel_table(cbba: CBBA) -> BeliefTable:
    com = commitment_table(cbba)
    return BeliefTable(cbba.frame, zeta_transform(com.values), TableKind.BELIEF)


def gpl_table(cbba: CBBA, bel: BeliefTable | None = None) -> BeliefTable:
    """Plausibility table from the belief table via ``1 - bel[complement]``."""
    if bel is None:
        bel = gbel_table(cbba)
    # complement of mask i is full ^ i == full - i, i.e. the reversed table
    values = 1.0 - bel.values[::-1]
    values[0] = 0.0
    return BeliefTable(cbba.frame, values, TableKind.PLAUSIBILITY)


def tables(cbba: CBBA) -> tuple[BeliefTable, BeliefTable, BeliefTable]:
    """Commitment, belief and plausibility tables in one pass."""
    com = commitment_table(cbba)
    bel = BeliefTable(cbba.frame, zeta_transform(com.values), TableKind.BELIEF)
    return com, bel, gpl_table(cbba, bel)


def naive_gbel_table(cbba: CBBA) -> BeliefTable:
    """Belief table by pointwise :func:`gbel` on every proposition (``3**N``)."""
    _require_naive(cbba.frame.size)
    frame = cbba.frame
    values = [gbel(cbba, frame.from_bits(b)) for b in range(1 << frame.size)]
    return BeliefTable(frame, values, TableKind.BELIEF)


def mobius_invert(bel: BeliefTable, method: str = "fast") -> BeliefTable:
    """Recover the commitment table from a belief table.

    ``method`` is ``"fast"`` (per-bit sweep) or ``"naive"`` (literal
    alternating sum, ``N <= 14``).
    """
    if bel.kind is not TableKind.BELIEF:
        raise InvalidTable(f"expected a belief table, got {bel.kind.value}")
    if bel.values[0] != 0.0:
        raise InvalidTable(f"belief of the empty set is {float(bel.values[0])!r}, expected 0")
    if method == "fast":
        values = mobius_transform(bel.values)
    elif method == "naive":
        values = naive_mobius(bel.values)
    else:
        raise ValueError(f"unknown method {method!r}")
    return BeliefTable(bel.frame, values, TableKind.COMMITMENT)


# -- axioms ------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    empty_is_zero: bool
    full_is_one: bool
    monotone: bool
    worst_violation: float  # largest amount by which any check failed, 0 if none
    worst_at: tuple[int, ...] | None  # masks involved in the worst violation

    @property
    def ok(self) -> bool:
        return self.empty_is_zero and self.full_is_one and self.monotone


def check_axioms(cbba: CBBA, tolerance: float = UNITY_TOL, bel: BeliefTable | None = None) -> AxiomReport:
    """Check belief of the empty set, of the full frame, and monotonicity.

    Monotonicity is checked on every pair ``(A, A + {x})``, which covers all
    subset pairs by transitivity.
    """
    if bel is None:
        bel = gbel_table(cbba)
    v = bel.values
    worst, worst_at = 0.0, None
    empty_ok = bool(v[0] == 0.0)
    if not empty_ok:
        worst, worst_at = abs(float(v[0])), (0,)
    full_gap = abs(float(v[-1]) - 1.0)
    full_ok = full_gap <= tolerance
    if not full_ok and full_gap > worst:
        worst, worst_at = full_gap, (len(v) - 1,)
    monotone = True
    idx = np.arange(len(v))
    for i in range(cbba.frame.size):
        view = v.reshape(-1, 2, 1 << i)
        drop = (view[:, 0, :] - view[:, 1, :]).ravel()
        k = int(np.argmax(drop))
        if drop[k] > TABLE_SLACK:
            monotone = False
            if drop[k] > worst:
                lower = int(idx.reshape(-1, 2, 1 << i)[:, 0, :].ravel()[k])
                worst, worst_at = float(drop[k]), (lower, lower | (1 << i))
    return AxiomReport(empty_ok, full_ok, monotone, worst, worst_at)


@dataclass(frozen=True)
class Axiom3Result:
    lhs: float
    rhs: float
    holds: bool


def axiom3_check(
    cbba: CBBA,
    sets: Sequence[Proposition],
    tolerance: float = TABLE_SLACK,
    form: str = "com",
) -> Axiom3Result:
    """Evaluate the inclusion-exclusion lower bound on belief of a union.

    ``lhs`` is the belief of the union of ``sets``; ``rhs`` is the signed
    sum over non-empty index subsets ``I`` of ``f(intersection of sets in I)``
    with sign ``(-1)**(|I| + 1)``.  ``form="com"`` takes ``f`` to be the
    commitment degree, ``form="bel"`` the generalized belief (the classical
    total-monotonicity inequality).
    """
    if not 1 <= len(sets) <= AXIOM3_MAX_SETS:
        raise ValueError(f"between 1 and {AXIOM3_MAX_SETS} sets required, got {len(sets)}")
    if form == "com":
        term = cbba.commitment
    elif form == "bel":
        term = lambda a: gbel(cbba, a)  # noqa: E731
    else:
        raise ValueError(f"unknown form {form!r}")
    full = cbba.frame.full
    union_all = cbba.frame.empty
    for a in sets:
        union_all = union_all | a
    cache: dict[Proposition, float] = {}
    terms = []
    for k in range(1, len(sets) + 1):
        sign = 1.0 if k % 2 else -1.0
        for group in combinations(sets, k):
            inter = full
            for a in group:
                inter = inter & a
            if inter not in cache:
                cache[inter] = term(inter)
            terms.append(sign * cache[inter])
    lhs = gbel(cbba, union_all)
    rhs = math.fsum(terms)
    return Axiom3Result(lhs, rhs, lhs >= rhs - tolerance)
