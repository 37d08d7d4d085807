import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from relpaths.algebra import Relation  # noqa: E402

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

#: verdict lines collected by the acceptance tests
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)


@st.composite
def relations(draw, n=None, min_n=0, max_n=6):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * n)) - 1))
    return Relation(n, bits)


@st.composite
def relation_tuples(draw, k, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(relations(n=n)) for _ in range(k))


@pytest.fixture
def rel():
    """Build a relation from a pair list: ``rel(3, [(0, 1)])``."""
    return Relation.from_pairs
