"""Finite-dimensional spans of eventually-constant functionals.

A family of sequences whose cutoffs are all ``<= L`` is handled in the chart
of ``L + 1`` coordinate classes: entries ``0..L-1`` plus the shared tail.
Linear algebra there is ordinary exact Gaussian elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .seqspace import EcSeq, lin_comb, pair

Matrix = list[list[Fraction]]


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form with leftmost pivots; zero rows dropped."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [v / piv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis of ``{v : rows @ v = 0}``, each vector scaled so its first nonzero entry is 1."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        lead = next(a for a in v if a != 0)
        basis.append([a / lead for a in v])
    return basis


def chart_width(seqs: Iterable[EcSeq]) -> int:
    return max((s.cutoff for s in seqs), default=0)


@dataclass(frozen=True)
class FunctionalSpan:
    """Span of EcSeq functionals, stored as its unique reduced basis."""

    basis: tuple[EcSeq, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def width(self) -> int:
        """Largest cutoff over the basis (``L``)."""
        return chart_width(self.basis)

    @property
    def n_classes(self) -> int:
        return self.width + 1

    def __contains__(self, f: EcSeq) -> bool:
        L = max(self.width, f.cutoff)
        rows = [b.classes(L) for b in self.basis]
        return len(rref(rows + [f.classes(L)])[0]) == len(rows)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)


def reduce_span(vectors: Iterable[EcSeq]) -> FunctionalSpan:
    vectors = list(vectors)
    L = chart_width(vectors)
    red, _ = rref([v.classes(L) for v in vectors])
    return FunctionalSpan(tuple(EcSeq.from_classes(r) for r in red))


def intersect_with_c0(sp: FunctionalSpan) -> FunctionalSpan:
    """Elements of ``sp`` with zero tail.

    The tail is a single linear functional on the coefficients, so the result
    keeps every basis vector but one after eliminating its tail.
    """
    basis = list(sp.basis)
    j = next((i for i, b in enumerate(basis) if b.tail != 0), None)
    if j is None:
        return sp
    pivot = basis[j]
    reduced = [
        lin_comb([1, -b.tail / pivot.tail], [b, pivot])
        for i, b in enumerate(basis) if i != j
    ]
    return reduce_span(reduced)


def span_equals(a: FunctionalSpan, b: FunctionalSpan) -> bool:
    # Re-reduce in the joint chart; the canonical basis is chart independent
    # but this keeps the check honest for hand-built FunctionalSpan objects.
    return reduce_span(a.basis).basis == reduce_span(b.basis).basis


def kernel_basis_on_window(sp: FunctionalSpan, W: int) -> list[EcSeq]:
    """Basis of finite-support ``x`` living on ``[0, W)`` with ``<x, b> = 0`` for all ``b``."""
    if W < sp.n_classes:
        raise ValueError(f"window {W} is smaller than the {sp.n_classes} coordinate classes")
    rows = [b.expanded_prefix(W) for b in sp.basis]
    return [EcSeq(tuple(v), 0) for v in nullspace(rows, W)]


@dataclass(frozen=True)
class SubspaceKernel:
    """The subspace ``{x in l1 : <x, g> = 0 for every constraint g}``."""

    constraints: FunctionalSpan = FunctionalSpan()

    @classmethod
    def of(cls, functionals: Iterable[EcSeq]) -> "SubspaceKernel":
        return cls(reduce_span(functionals))

    @property
    def n_classes(self) -> int:
        return self.constraints.n_classes

    def contains(self, x: EcSeq) -> bool:
        return all(pair(x, g) == 0 for g in self.constraints)
