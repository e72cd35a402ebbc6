from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from arcloci.polyhedral import MonomialIdeal

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

CUSP = MonomialIdeal([(2, 0), (0, 3)])
MAX2 = MonomialIdeal([(1, 0), (0, 1)])


@st.composite
def ideals(draw, max_dim=3, max_gens=4, max_exp=5, dim=None):
    d = dim if dim is not None else draw(st.integers(1, max_dim))
    vec = st.tuples(*[st.integers(0, max_exp)] * d).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(gens, d)


@st.composite
def ideal_pairs(draw, max_dim=3, max_gens=3, max_exp=4):
    a = draw(ideals(max_dim=max_dim, max_gens=max_gens, max_exp=max_exp))
    b = draw(ideals(dim=a.dim, max_gens=max_gens, max_exp=max_exp))
    return a, b


rationals = st.fractions(min_value=Fraction(1, 12), max_value=4, max_denominator=12)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
