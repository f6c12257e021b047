"""Exact two-phase tableau simplex over the rationals.

Bland's smallest-index rule is used for both the entering and the leaving
variable, so degenerate problems terminate and results are reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arith import as_rational

RELATIONS = ("<=", "=", ">=")


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class LpCertificateError(RuntimeError):
    """Raised in debug mode when a solution fails its own exact checks."""


@dataclass
class LpProblem:
    """maximize ``objective . v`` subject to ``rows`` and per-variable ``bounds``.

    Each row is ``(coefficients, relation, rhs)`` with relation one of
    ``"<=", "=", ">="``.  ``bounds[j] = (lo, hi)`` where either side may be
    ``None``; variables without bounds are free.
    """

    objective: list
    rows: list = field(default_factory=list)
    bounds: Optional[list] = None

    def __post_init__(self):
        self.objective = [as_rational(c) for c in self.objective]
        n = len(self.objective)
        rows = []
        for i, (coeffs, rel, rhs) in enumerate(self.rows):
            if len(coeffs) != n:
                raise ValueError(f"row {i} has {len(coeffs)} coefficients, expected {n}")
            if rel not in RELATIONS:
                raise ValueError(f"row {i}: unknown relation {rel!r}")
            rows.append(([as_rational(a) for a in coeffs], rel, as_rational(rhs)))
        self.rows = rows
        if self.bounds is None:
            self.bounds = [(None, None)] * n
        if len(self.bounds) != n:
            raise ValueError(f"{len(self.bounds)} bounds for {n} variables")
        self.bounds = [
            (None if lo is None else as_rational(lo), None if hi is None else as_rational(hi))
            for lo, hi in self.bounds
        ]

    @property
    def n_vars(self) -> int:
        return len(self.objective)


@dataclass
class LpResult:
    status: LpStatus
    value: Optional[Fraction] = None
    vertex: Optional[list] = None

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


def check_feasible(p: LpProblem, v: Sequence) -> bool:
    if len(v) != p.n_vars:
        raise ValueError(f"point has {len(v)} entries, problem has {p.n_vars} variables")
    v = [as_rational(a) for a in v]
    for (lo, hi), a in zip(p.bounds, v):
        if lo is not None and a < lo:
            return False
        if hi is not None and a > hi:
            return False
    for coeffs, rel, rhs in p.rows:
        lhs = sum((c * a for c, a in zip(coeffs, v) if c), Fraction(0))
        if rel == "<=" and lhs > rhs or rel == ">=" and lhs < rhs or rel == "=" and lhs != rhs:
            return False
    return True


@dataclass
class _StandardForm:
    """``maximize c.z + const`` s.t. ``A z (rel) b``, ``z >= 0`` with ``b >= 0``."""

    c: list
    const: Fraction
    rows: list
    var_map: list  # per original variable: (offset, [(z column, coefficient)])


def _standardize(p: LpProblem) -> _StandardForm:
    var_map = []
    nz = 0
    extra_rows = []
    for lo, hi in p.bounds:
        if lo is not None:
            var_map.append((lo, [(nz, Fraction(1))]))
            if hi is not None:
                extra_rows.append((nz, hi - lo))
            nz += 1
        elif hi is not None:
            var_map.append((hi, [(nz, Fraction(-1))]))
            nz += 1
        else:
            var_map.append((Fraction(0), [(nz, Fraction(1)), (nz + 1, Fraction(-1))]))
            nz += 2

    def substitute(coeffs):
        out = [Fraction(0)] * nz
        shift = Fraction(0)
        for a, (offset, cols) in zip(coeffs, var_map):
            if not a:
                continue
            shift += a * offset
            for col, s in cols:
                out[col] += a * s
        return out, shift

    c, const = substitute(p.objective)
    rows = []
    for coeffs, rel, rhs in p.rows:
        a, shift = substitute(coeffs)
        rows.append((a, rel, rhs - shift))
    for col, ub in extra_rows:
        a = [Fraction(0)] * nz
        a[col] = Fraction(1)
        rows.append((a, "<=", ub))
    flip = {"<=": ">=", ">=": "<=", "=": "="}
    rows = [(a, rel, b) if b >= 0 else ([-x for x in a], flip[rel], -b) for a, rel, b in rows]
    return _StandardForm(c, const, rows, var_map)


class _Tableau:
    def __init__(self, rows, basis, ncols):
        self.T = rows          # m rows of length ncols + 1 (last entry is rhs)
        self.basis = basis
        self.ncols = ncols
        self.z = [Fraction(0)] * (ncols + 1)

    def set_objective(self, c):
        # z-row holds -reduced profits; last entry is the current objective value.
        self.z = [-a for a in c] + [Fraction(0)]
        for i, b in enumerate(self.basis):
            f = self.z[b]
            if f:
                self.z = [zv - f * tv for zv, tv in zip(self.z, self.T[i])]

    def pivot(self, r, c):
        row = self.T[r]
        piv = row[c]
        if piv != 1:
            row = [v / piv for v in row]
            self.T[r] = row
        nz = [(j, v) for j, v in enumerate(row) if v]
        for i, other in enumerate(self.T):
            if i != r and other[c]:
                f = other[c]
                for j, v in nz:
                    other[j] -= f * v
        f = self.z[c]
        if f:
            for j, v in nz:
                self.z[j] -= f * v
        self.basis[r] = c

    def run(self, allowed) -> bool:
        """Iterate to optimality; return False if the objective is unbounded."""
        while True:
            enter = next((j for j in allowed if self.z[j] < 0), None)
            if enter is None:
                return True
            best = None
            for i, row in enumerate(self.T):
                a = row[enter]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], enter)


def _solve_standard(sf: _StandardForm):
    """Return (status, z) for the standard form."""
    nz = len(sf.c)
    n_slack = sum(1 for _, rel, _ in sf.rows if rel != "=")
    n_art = sum(1 for _, rel, _ in sf.rows if rel != "<=")
    ncols = nz + n_slack + n_art
    T, basis = [], []
    s_col, a_col = nz, nz + n_slack
    for a, rel, b in sf.rows:
        row = list(a) + [Fraction(0)] * (n_slack + n_art) + [b]
        if rel == "<=":
            row[s_col] = Fraction(1)
            basis.append(s_col)
            s_col += 1
        else:
            if rel == ">=":
                row[s_col] = Fraction(-1)
                s_col += 1
            row[a_col] = Fraction(1)
            basis.append(a_col)
            a_col += 1
        T.append(row)
    tab = _Tableau(T, basis, ncols)
    art_start = nz + n_slack

    if n_art:
        tab.set_objective([Fraction(0)] * art_start + [Fraction(-1)] * n_art)
        tab.run(range(ncols))
        if tab.z[-1] < 0:
            return LpStatus.INFEASIBLE, None
        # Drive zero-level artificials out; rows with no other support are redundant.
        i = 0
        while i < len(tab.T):
            if tab.basis[i] >= art_start:
                j = next((j for j in range(art_start) if tab.T[i][j] != 0), None)
                if j is None:
                    del tab.T[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, j)
            i += 1

    tab.set_objective(list(sf.c) + [Fraction(0)] * (ncols - nz))
    if not tab.run(range(art_start)):
        return LpStatus.UNBOUNDED, None
    z = [Fraction(0)] * nz
    for i, b in enumerate(tab.basis):
        if b < nz:
            z[b] = tab.T[i][-1]
    return LpStatus.OPTIMAL, z


def solve_lp(p: LpProblem, debug: bool = False) -> LpResult:
    """Solve ``p`` exactly.

    With ``debug`` set, the optimal vertex is re-checked for feasibility and
    the dual of the standard form is solved to confirm the bound it gives
    matches the primal value.
    """
    sf = _standardize(p)
    status, z = _solve_standard(sf)
    if status is not LpStatus.OPTIMAL:
        return LpResult(status)
    vertex = [offset + sum((s * z[col] for col, s in cols), Fraction(0))
              for offset, cols in sf.var_map]
    value = sum((c * v for c, v in zip(p.objective, vertex)), Fraction(0))
    if debug:
        if not check_feasible(p, vertex):
            raise LpCertificateError("optimal vertex violates the constraints")
        bound = _dual_bound(sf)
        if bound is None or bound < value:
            raise LpCertificateError(f"dual bound {bound} is below primal value {value}")
        if bound != value:
            raise LpCertificateError(f"duality gap {bound - value} at claimed optimum")
    return LpResult(LpStatus.OPTIMAL, value, vertex)


def _dual_bound(sf: _StandardForm) -> Optional[Fraction]:
    # Slack columns are written out explicitly so the dual is: min b.w s.t. A^T w >= c, w free.
    m = len(sf.rows)
    nz = len(sf.c)
    cols = [[a[j] for a, _, _ in sf.rows] for j in range(nz)]
    cost = list(sf.c)
    for i, (_, rel, _) in enumerate(sf.rows):
        if rel != "=":
            unit = [Fraction(0)] * m
            unit[i] = Fraction(1 if rel == "<=" else -1)
            cols.append(unit)
            cost.append(Fraction(0))
    dual = LpProblem(
        objective=[-b for _, _, b in sf.rows],
        rows=[(col, ">=", cj) for col, cj in zip(cols, cost)],
    )
    res = solve_lp(dual)
    if not res.optimal:
        return None
    return -res.value + sf.const
