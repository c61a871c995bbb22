import sys
from pathlib import Path

import pytest
from hypothesis import settings

from matred.matroid import matroid_from_family

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"

# Rank-2 matroid on {1,2,3} where 1 and 3 are parallel.
# Independent sets {}, {1}, {2}, {3}, {1,2}, {2,3} as 0-based masks.
PARALLEL_FAMILY = [0b000, 0b001, 0b010, 0b100, 0b011, 0b110]


@pytest.fixture
def par():
    return matroid_from_family(3, PARALLEL_FAMILY)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
