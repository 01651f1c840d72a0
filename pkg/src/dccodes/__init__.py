"""Exact workbench for binary double-circulant and bordered codes."""

from .gf2ring import (
    RingElement,
    add,
    complement,
    conjugate,
    free_gcd,
    free_mod,
    lift,
    mul,
    parse_poly_text,
    poly_text,
    reciprocal,
    shift,
    weight,
    xm_minus_one,
)
from .circulant import (
    CirculantMatrix,
    CosetPartition,
    count_orthogonal,
    cyclotomic_cosets,
    from_poly,
    is_orthogonal,
)
from .linear_code import (
    BinaryCode,
    CodeMetrics,
    EnumerationBudgetError,
    extremal_bound,
    hull_dimension,
    is_extremal,
    metrics,
    min_distance,
    parity_check_standard,
    weight_distribution,
)
from .dc_codes import DcDescriptor, canonical_form, equivalence_class, trisection
from .bordered import BorderedDescriptor, complement_lift, dc_is_lcd
from .search import SearchConfig, SearchReport, SearchVerificationError, emit, search
from .tables import reproduce_tables

__version__ = "0.1.0"
