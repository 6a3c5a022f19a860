import random

import pytest

from omnitoric import families


FAMILY_SPECS = [
    "cpn:1:l", "cpn:1:lprime", "cpn:2:l", "cpn:2:lprime", "cpn:3:l", "cpn:3:lprime",
    "cpn:4:l", "cpn:4:lprime",
    "bn:1", "bn:2", "bn:3", "bn:4",
    "bij:1:2", "bij:1:3", "bij:2:2", "bij:2:3", "bij:1:4", "bij:3:3",
]


@pytest.fixture(scope="session")
def family_pairs():
    return {s: families.build(families.parse_spec(s)) for s in FAMILY_SPECS}


@pytest.fixture
def rng():
    return random.Random(20001309)


# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
