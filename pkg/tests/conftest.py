from fractions import Fraction

import pytest
from hypothesis import strategies as st

from predual import EcSeq, SubspaceKernel

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
prefixes = st.lists(rationals, max_size=6)
ecseqs = st.builds(lambda p, t: EcSeq(tuple(p), t), prefixes, rationals)
points = st.builds(lambda p: EcSeq(tuple(p), 0), prefixes)
kernels = st.lists(ecseqs, max_size=4).map(SubspaceKernel.of)
zero_tail_kernels = st.lists(points, max_size=4).map(SubspaceKernel.of)


@pytest.fixture
def example1():
    """S = ker(all-ones), y = e0."""
    return EcSeq.unit(0), SubspaceKernel.of([EcSeq.constant(1)])


@pytest.fixture
def example2():
    """S = ker(e0, shifted ones), y = (1, 1, 0, ...)."""
    return EcSeq((1, 1), 0), SubspaceKernel.of([EcSeq.unit(0), EcSeq((0,), 1)])
