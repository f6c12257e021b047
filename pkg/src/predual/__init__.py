"""Exact minimum-distance duality computations in l1, l_inf and c0."""

from .arith import Rational, RationalParseError, parse_rational, render_rational
from .duality import (
    DualityReport,
    analyze,
    annihilator,
    condition_holds,
    double_perp,
    dual_max,
    gap_witness,
    pre_annihilator,
    predual_sup,
    primal_min,
    theorem2_verify,
    truncated_primal_estimate,
)
from .seqspace import DomainError, EcSeq, SpaceTag, canonicalize, l1_norm, lin_comb, pair, sup_norm
from .simplex import LpProblem, LpResult, LpStatus, check_feasible, solve_lp
from .span import (
    FunctionalSpan,
    SubspaceKernel,
    intersect_with_c0,
    kernel_basis_on_window,
    reduce_span,
    span_equals,
)

__version__ = "0.1.0"
