from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from predual.seqspace import EcSeq, lin_comb, pair
from predual.simplex import LpProblem, solve_lp
from predual.span import (
    FunctionalSpan,
    SubspaceKernel,
    intersect_with_c0,
    kernel_basis_on_window,
    reduce_span,
    span_equals,
)

from conftest import ecseqs
from oracles import bareiss_rank

ONES = EcSeq.constant(1)
SHIFTED = EcSeq((0,), 1)
E0 = EcSeq.unit(0)

families = st.lists(ecseqs, max_size=4)


def test_reduce_span_examples():
    sp = reduce_span([ONES, ONES.scale(2)])
    assert sp.dim == 1 and sp.basis == (ONES,)
    assert reduce_span([E0, SHIFTED]).dim == 2
    assert reduce_span([]).dim == 0


@given(families)
def test_dim_is_rank(vs):
    L = max((v.cutoff for v in vs), default=0)
    assert reduce_span(vs).dim == bareiss_rank([v.classes(L) for v in vs])


@given(families)
def test_reduce_idempotent(vs):
    sp = reduce_span(vs)
    assert reduce_span(sp.basis) == sp


def test_intersect_examples():
    assert intersect_with_c0(reduce_span([ONES])).dim == 0
    assert span_equals(intersect_with_c0(reduce_span([E0, SHIFTED])), reduce_span([E0]))
    sp = reduce_span([E0, EcSeq.unit(3)])
    assert intersect_with_c0(sp) == sp


@given(families)
def test_intersect_properties(vs):
    sp = reduce_span(vs)
    out = intersect_with_c0(sp)
    assert all(b.tail == 0 and b in sp for b in out.basis)
    assert out.dim in (sp.dim, sp.dim - 1)
    assert out.dim == sp.dim or sp.dim > 0


def test_span_equals_examples():
    assert span_equals(reduce_span([E0]), reduce_span([E0.scale(2)]))
    assert not span_equals(reduce_span([ONES]), reduce_span([E0]))


def _in_span_lp(f, sp):
    # membership oracle: does some c solve sum c_i b_i = f?  Feasibility LP, zero objective.
    basis = list(sp.basis)
    L = max([b.cutoff for b in basis] + [f.cutoff])
    charts = [b.classes(L) for b in basis]
    target = f.classes(L)
    rows = [([ch[k] for ch in charts], "=", target[k]) for k in range(L + 1)]
    return solve_lp(LpProblem([0] * len(basis), rows)).optimal


@settings(max_examples=60)
@given(families, families, st.booleans())
def test_span_equals_matches_containment(a, b, mix):
    if mix:
        # make equal spans likely: b is a recombination of a
        b = [lin_comb([1, 2], [u, v]) for u, v in zip(a, a[1:] + a[:1])] + a[:1]
    A, B = reduce_span(a), reduce_span(b)
    oracle = all(_in_span_lp(f, B) for f in A.basis) and all(_in_span_lp(f, A) for f in B.basis)
    assert span_equals(A, B) == oracle


def test_kernel_window_examples():
    assert kernel_basis_on_window(reduce_span([ONES]), 2) == [EcSeq((1, -1), 0)]
    assert kernel_basis_on_window(FunctionalSpan(), 3) == [EcSeq.unit(0), EcSeq.unit(1), EcSeq.unit(2)]
    with pytest.raises(ValueError):
        kernel_basis_on_window(reduce_span([SHIFTED]), 1)


@given(families, st.integers(0, 4))
def test_kernel_window_nullspace(vs, extra):
    sp = reduce_span(vs)
    W = sp.n_classes + extra
    ker = kernel_basis_on_window(sp, W)
    assert all(x.tail == 0 and x.cutoff <= W for x in ker)
    assert all(pair(x, b) == 0 for x in ker for b in sp.basis)
    restricted = [b.expanded_prefix(W) for b in sp.basis]
    assert len(ker) == W - bareiss_rank(restricted)
    assert bareiss_rank([x.expanded_prefix(W) for x in ker]) == len(ker)


def test_subspace_kernel_drops_dependent_constraints():
    S = SubspaceKernel.of([ONES, ONES.scale(Fraction(-3, 2))])
    assert S.constraints.dim == 1
    assert S.contains(EcSeq((1, -1), 0))
    assert not S.contains(E0)
