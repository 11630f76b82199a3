import random

import pytest
from hypothesis import strategies as st

from jackpoly.alpha import AlphaPoly, AlphaRational
from jackpoly.multipoly import MultiPoly


@pytest.fixture
def rng():
    return random.Random(20240607)


small_ints = st.integers(min_value=-6, max_value=6)
alpha_polys = st.lists(small_ints, max_size=4).map(AlphaPoly)
nonzero_alpha_polys = alpha_polys.filter(lambda p: not p.is_zero())
alpha_rationals = st.builds(AlphaRational, alpha_polys, nonzero_alpha_polys)


@st.composite
def multipolys(draw, n=None, max_degree=4, max_terms=5, rational=False):
    n = draw(st.integers(1, 3)) if n is None else n
    coeff = alpha_rationals if rational else alpha_polys.map(AlphaRational)
    terms = draw(st.lists(
        st.tuples(st.lists(st.integers(0, max_degree), min_size=n, max_size=n)
                  .filter(lambda e: sum(e) <= max_degree).map(tuple), coeff),
        max_size=max_terms))
    return MultiPoly(n, terms)


_CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    name = request.node.name

    def record(passed: bool, detail: str = "") -> bool:
        _CRITERIA[name] = (passed, detail)
        print(f"{'PASS' if passed else 'FAIL'} {name} {detail}".rstrip())
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        passed, detail = _CRITERIA[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}".rstrip())
