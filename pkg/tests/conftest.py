import pytest

from f4rigid.rootdata import datum_for_type, f4_datum
from f4rigid.weyl import enumerate_weyl


@pytest.fixture(scope="session")
def f4():
    return f4_datum()


@pytest.fixture(scope="session")
def wf4(f4):
    return enumerate_weyl(f4)


@pytest.fixture(scope="session")
def small_groups():
    return {t: enumerate_weyl(datum_for_type(t)) for t in ("A1", "A2", "B3", "C3", "G2", "A2+A1")}


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
