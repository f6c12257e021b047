"""Minimum-distance duality for kernel subspaces of l1.

For ``S = {x in l1 : <x, g_i> = 0}`` with finitely many eventually-constant
``g_i`` this module computes:

* the distance ``inf_{x in S} ||y - x||_1`` through the dual maximisation over
  the annihilator ``S^perp = span{g_i}`` (always exact), plus an attaining
  primal point from finite-window LPs;
* the predual supremum over the pre-annihilator ``S^perp ∩ c0``;
* the gap between the two, whether ``(^perp S)^perp = S``, and a point that
  exhibits a strictly positive gap when it does not.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .seqspace import DomainError, EcSeq, l1_norm, lin_comb, pair, sup_norm
from .simplex import LpProblem, LpStatus, solve_lp
from .span import (
    FunctionalSpan,
    SubspaceKernel,
    intersect_with_c0,
    kernel_basis_on_window,
    reduce_span,
    span_equals,
)

log = logging.getLogger(__name__)

ZERO = Fraction(0)


class DualityInvariantError(RuntimeError):
    """A relation that must hold exactly was violated (indicates a bug)."""


class GapWitnessError(RuntimeError):
    """No gap witness was found inside the allowed window budget."""


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise DualityInvariantError(message)


def _require_l1(y: EcSeq) -> None:
    if y.tail != 0:
        raise DomainError(f"the point must lie in l1 (tail 0), got tail {y.tail}")


# --------------------------------------------------------------------------
# annihilators


def annihilator(S: SubspaceKernel) -> FunctionalSpan:
    # A finite span of functionals is weak*-closed, so S^perp is exactly it.
    return reduce_span(S.constraints.basis)


def pre_annihilator(S: SubspaceKernel) -> FunctionalSpan:
    return intersect_with_c0(annihilator(S))


def double_perp(S: SubspaceKernel) -> SubspaceKernel:
    """``(^perp S)^perp`` as the kernel of the pre-annihilator basis."""
    return SubspaceKernel(pre_annihilator(S))


def condition_holds(S: SubspaceKernel) -> bool:
    return span_equals(annihilator(S), pre_annihilator(S))


# --------------------------------------------------------------------------
# maximisation over a unit ball of functionals


def _max_over_span(y: EcSeq, sp: FunctionalSpan) -> tuple[Fraction, EcSeq]:
    """max <y, lam> over lam in ``sp`` with sup norm <= 1."""
    basis = list(sp.basis)
    if not basis:
        return ZERO, EcSeq.zero()
    L = sp.width
    charts = [b.classes(L) for b in basis]
    rows = []
    for k in range(L + 1):
        coeffs = [ch[k] for ch in charts]
        rows.append((coeffs, "<=", 1))
        rows.append((coeffs, ">=", -1))
    res = solve_lp(LpProblem([pair(y, b) for b in basis], rows))
    _check(res.optimal, f"unit-ball LP ended {res.status.value}")
    return res.value, lin_comb(res.vertex, basis)


def dual_max(y: EcSeq, S: SubspaceKernel) -> tuple[Fraction, EcSeq]:
    """max over lam in S^perp, ||lam||_inf <= 1 of <y, lam>, with a maximiser."""
    _require_l1(y)
    return _max_over_span(y, annihilator(S))


def predual_sup(y: EcSeq, S: SubspaceKernel) -> tuple[Fraction, EcSeq]:
    """sup over nu in ^perp S, ||nu|| <= 1 of <nu, y>; attained here, so a maximiser is returned."""
    _require_l1(y)
    return _max_over_span(y, pre_annihilator(S))


# --------------------------------------------------------------------------
# primal side


def _window_primal(y: EcSeq, S: SubspaceKernel, W: int) -> tuple[Fraction, EcSeq]:
    """min ||y - x||_1 over x in S supported on [0, W).

    Writes ``y - x = p - q`` with ``p, q >= 0`` on the window, so the only rows
    are ``<p - q, g> = <y, g>`` for each constraint.  Mass of ``y`` beyond the
    window is added as a constant.
    """
    gs = list(S.constraints.basis)
    rows = []
    for g in gs:
        col = g.expanded_prefix(W)
        rows.append((col + [-a for a in col], "=", pair(y, g)))
    res = solve_lp(LpProblem([-1] * (2 * W), rows, [(0, None)] * (2 * W)))
    _check(res.optimal, f"window-{W} primal LP ended {res.status.value}")
    p, q = res.vertex[:W], res.vertex[W:]
    outside = sum((abs(v) for v in y.prefix[W:]), ZERO)
    x = EcSeq(tuple(y.entry(k) - p[k] + q[k] for k in range(W)), 0)
    return -res.value + outside, x


def default_windows(y: EcSeq, S: SubspaceKernel) -> tuple[int, int]:
    start = S.n_classes + y.cutoff + S.constraints.dim
    return start, 64 * start


def primal_min(
    y: EcSeq,
    S: SubspaceKernel,
    window_start: Optional[int] = None,
    window_max: Optional[int] = None,
) -> tuple[Fraction, EcSeq, bool]:
    """Distance from ``y`` to ``S`` with a primal witness.

    The value always comes from :func:`dual_max`.  The witness is the optimum
    of window LPs of doubling width; ``certified`` is True once a window LP
    reaches the dual value, which proves the witness optimal.
    """
    _require_l1(y)
    d_start, d_max = default_windows(y, S)
    W = d_start if window_start is None else window_start
    W_max = d_max if window_max is None else window_max
    if W < S.n_classes or W < y.cutoff:
        raise ValueError(
            f"window start {W} must cover {S.n_classes} coordinate classes and support {y.cutoff}"
        )
    value, _ = dual_max(y, S)
    best: Optional[tuple[Fraction, EcSeq]] = None
    while True:
        v, x = _window_primal(y, S, W)
        _check(v >= value, f"window LP value {v} below the dual value {value}")
        if best is None or v < best[0]:
            best = (v, x)
        if v == value:
            return value, x, True
        if W >= W_max:
            break
        W = min(2 * W, W_max)
    log.warning("no attaining witness up to window %d; best value %s vs %s", W_max, best[0], value)
    return value, best[1], False


def truncated_primal_estimate(y: EcSeq, S: SubspaceKernel, N: int, method: str = "exact"):
    """Primal distance restricted to ``x`` supported on ``[0, N)``.

    ``method="float"`` solves the same LP with scipy's HiGHS in floating point
    and returns a float; it shares no code with the exact simplex and serves
    as a cross-check.
    """
    _require_l1(y)
    if N < S.n_classes:
        raise ValueError(f"window {N} is smaller than the {S.n_classes} coordinate classes")
    if method == "exact":
        return _window_primal(y, S, N)[0]
    if method == "float":
        return _window_primal_float(y, S, N)
    raise ValueError(f"unknown method {method!r}")


def _window_primal_float(y: EcSeq, S: SubspaceKernel, N: int) -> float:
    import numpy as np
    from scipy.optimize import linprog

    gs = list(S.constraints.basis)
    c = np.ones(2 * N)
    if gs:
        G = np.array([[float(a) for a in g.expanded_prefix(N)] for g in gs])
        A_eq = np.hstack([G, -G])
        b_eq = np.array([float(pair(y, g)) for g in gs])
    else:
        A_eq = b_eq = None
    res = linprog(c, A_eq=A_eq, b_eq=b_eq, bounds=[(0, None)] * (2 * N), method="highs")
    if res.status != 0:
        raise RuntimeError(f"float window LP failed: {res.message}")
    return float(res.fun) + float(sum(abs(v) for v in y.prefix[N:]))


# --------------------------------------------------------------------------
# the dual-space distance problem


def theorem2_verify(zeta: EcSeq, S: SubspaceKernel, window: int) -> tuple[Fraction, EcSeq, Fraction]:
    """Both sides of ``min_{lam in S^perp} ||zeta - lam||_inf = sup_{x in S, ||x||_1 <= 1} <x, zeta>``.

    Returns ``(min_value, minimiser, sup_lower_bound)`` where the lower bound
    restricts ``x`` to support in ``[0, window)``.
    """
    basis = list(annihilator(S).basis)
    L = max([b.cutoff for b in basis] + [zeta.cutoff])
    zc = zeta.classes(L)
    charts = [b.classes(L) for b in basis]
    # variables: coefficients c_i (free), then the bound s
    rows = []
    for k in range(L + 1):
        coeffs = [ch[k] for ch in charts]
        rows.append((coeffs + [1], ">=", zc[k]))
        rows.append(([-a for a in coeffs] + [1], ">=", -zc[k]))
    res = solve_lp(LpProblem([0] * len(basis) + [-1], rows))
    _check(res.optimal, f"sup-norm distance LP ended {res.status.value}")
    min_value = -res.value
    lam = lin_comb(res.vertex[:-1], basis) if basis else EcSeq.zero()

    W = window
    z = zeta.expanded_prefix(W)
    rows = [([1] * (2 * W), "<=", 1)]
    for g in S.constraints.basis:
        col = g.expanded_prefix(W)
        rows.append((col + [-a for a in col], "=", 0))
    res = solve_lp(LpProblem(z + [-a for a in z], rows, [(0, None)] * (2 * W)))
    _check(res.optimal, f"window sup LP ended {res.status.value}")
    sup_lb = res.value
    _check(sup_lb <= min_value, f"sup bound {sup_lb} exceeds min {min_value}")
    return min_value, lam, sup_lb


# --------------------------------------------------------------------------
# gap witness and full report


def gap_witness(S: SubspaceKernel, window_max: Optional[int] = None) -> Optional[EcSeq]:
    """A finite-support ``y`` in ``(^perp S)^perp`` but not in ``S``, or None if the two coincide."""
    if condition_holds(S):
        return None
    P = pre_annihilator(S)
    W = S.n_classes
    W_max = 64 * W if window_max is None else window_max
    while True:
        for y in kernel_basis_on_window(P, W):
            if not S.contains(y):
                return y
        if W >= W_max:
            raise GapWitnessError(f"no gap witness on windows up to {W_max}")
        W = min(2 * W, W_max)


@dataclass(frozen=True)
class DualityReport:
    primal_value: Fraction
    primal_witness: EcSeq
    primal_certified: bool
    dual_value: Fraction
    dual_witness: EcSeq
    predual_value: Fraction
    predual_witness: EcSeq
    gap: Fraction
    condition_holds: bool
    double_perp_defect: int
    annihilator_dim: int
    pre_annihilator_dim: int
    window_start: int
    window_max: int


def analyze(
    y: EcSeq,
    S: SubspaceKernel,
    window_start: Optional[int] = None,
    window_max: Optional[int] = None,
) -> DualityReport:
    _require_l1(y)
    A = annihilator(S)
    P = pre_annihilator(S)
    holds = span_equals(A, P)
    d_start, d_max = default_windows(y, S)
    ws = d_start if window_start is None else window_start
    wm = d_max if window_max is None else window_max
    common = dict(
        condition_holds=holds,
        double_perp_defect=A.dim - P.dim,
        annihilator_dim=A.dim,
        pre_annihilator_dim=P.dim,
        window_start=ws,
        window_max=wm,
    )
    if y == EcSeq.zero():
        z = EcSeq.zero()
        return DualityReport(ZERO, z, True, ZERO, z, ZERO, z, ZERO, **common)

    dual_value, lam = dual_max(y, S)
    primal_value, x, certified = primal_min(y, S, ws, wm)
    predual_value, nu = predual_sup(y, S)
    gap = primal_value - predual_value

    _check(primal_value == dual_value, "primal and dual values differ")
    _check(sup_norm(lam) <= 1 and lam in A, "dual witness infeasible")
    _check(pair(y, lam) == dual_value, "dual witness does not attain the value")
    _check(nu.tail == 0 and sup_norm(nu) <= 1 and nu in P, "predual witness infeasible")
    _check(pair(nu, y) == predual_value, "predual witness does not attain the value")
    _check(gap >= 0, f"negative gap {gap}")
    _check(not holds or gap == 0, f"condition holds but gap is {gap}")
    if certified:
        _check(S.contains(x) and l1_norm(y - x) == primal_value, "certified witness is wrong")
    return DualityReport(
        primal_value, x, certified, dual_value, lam, predual_value, nu, gap, **common
    )
