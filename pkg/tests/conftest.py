import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from bridgekit.corpus import shipped_corpus  # noqa: E402

TREFOIL = "4 6 2"
FIGURE_EIGHT = "4 6 8 2"
KINK = "2"
K11A1 = "4 8 10 14 2 16 20 6 22 12 18"
K11A367_BRIDGE = "20 18 16 14 12 -30 -28 -26 -24 -22 40 38 36 34 32 -10 -8 -6 -4 -2"


@pytest.fixture(scope="session")
def corpus():
    return shipped_corpus()


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {e.name: e for e in corpus}


# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
