import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from freelength import Word  # noqa: E402
from freelength.homogeneity import ScheduleConfig, commutator_bound  # noqa: E402

letters = st.sampled_from("abAB")
raw_words = st.text(alphabet="abAB", max_size=30)
words = raw_words.map(Word)
short_words = st.text(alphabet="abAB", max_size=12).map(Word)
nonempty_words = words.filter(bool)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def headline():
    """(value, proof) for N=20, ks=1,2,6 in shared mode; computed once."""
    return commutator_bound(ScheduleConfig())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
