import sys

import pytest

from diffgsb.terms import Alphabet


@pytest.fixture
def xy():
    # declared ascending, so x > y
    return Alphabet(("y", "x"))


@pytest.fixture
def x3():
    return Alphabet(("x",), (1, 2, 3))


@pytest.fixture
def xy12():
    return Alphabet(("x", "y"), (1, 2))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
