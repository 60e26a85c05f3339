import json
from pathlib import Path

import pytest

from preradicals.builtins import builtin_quiver
from preradicals.preradical import Category, enumerate_preradicals

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parents[1] / "data"


@pytest.fixture(scope="session")
def oracle():
    return json.loads((FIXTURES / "a2_oracle.json").read_text())


@pytest.fixture(scope="session")
def a2():
    return builtin_quiver("a2")


@pytest.fixture(scope="session")
def a3():
    return builtin_quiver("a3")


@pytest.fixture(scope="session")
def C2(a2):
    return Category.type_a(a2, 2)


@pytest.fixture(scope="session")
def prs2(C2):
    return enumerate_preradicals(C2)


@pytest.fixture(scope="session")
def C3(a3):
    return Category.type_a(a3, 2)


@pytest.fixture(scope="session")
def prs3(C3):
    return enumerate_preradicals(C3)


@pytest.fixture(scope="session")
def by_name(prs2):
    from preradicals.labels import display_name

    return {display_name(t): t for t in prs2}


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
