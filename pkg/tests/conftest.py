from pathlib import Path

import pytest

from macaulay.cli import load_system
from macaulay.polycore import parse_poly

DATA = Path(__file__).parent / "data"

FIXTURE_NAMES = ["f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9"]
ZERO_DIMENSIONAL = ["f1", "f2", "f3", "f4", "f5", "f6", "f7", "f9"]


def system(name):
    return load_system(DATA / f"{name}.sys")


def poly(text, vars=("x", "y")):
    return parse_poly(text, list(vars))


@pytest.fixture
def data_dir():
    return DATA


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
