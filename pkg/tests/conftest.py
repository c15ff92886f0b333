import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from csskein.braids import braid_closure
from csskein.corpus import corpus_items

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def braid_diagrams(draw, max_crossings=8, max_strands=4):
    n = draw(st.integers(2, max_strands))
    gens = st.integers(1, n - 1).flatmap(lambda g: st.sampled_from((g, -g)))
    word = draw(st.lists(gens, min_size=1, max_size=max_crossings))
    return braid_closure(word, n)


@pytest.fixture(scope="session")
def corpus():
    return corpus_items(max_crossings=8)


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
