"""Complex basic belief assignments and generalized belief functions."""

from .cbba import CBBA, build_cbba, from_classical, random_cbba, validate
from .classical import ClassicalBBA, build_bba, classical_bel, classical_pl, random_bba
from .complexnum import ComplexScalar, add, argument, conjugate, from_polar, modulus, mul, sub
from .frame import (
    Frame,
    Proposition,
    cardinality,
    complement,
    intersect,
    is_subset,
    parse_proposition,
    powerset,
    union,
)
from .transforms import (
    BeliefTable,
    TableKind,
    axiom3_check,
    check_axioms,
    commitment_table,
    gbel,
    gbel_table,
    gpl,
    gpl_table,
    mobius_invert,
)
from .validation import ValidationReport, Violation

__version__ = "0.1.0"
