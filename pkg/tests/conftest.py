from pathlib import Path

import pytest

from cremona.lattice import HomaloidalType

DATA = Path(__file__).parent / "data"


def table1_types() -> list[HomaloidalType]:
    lines = (DATA / "table1.txt").read_text().split()
    return [HomaloidalType.parse(s) for s in lines]


@pytest.fixture(scope="session")
def table1():
    return table1_types()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 10):
        ok, detail = mod.RESULTS.get(n, (False, "not run"))
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
