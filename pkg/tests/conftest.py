from pathlib import Path

import pytest

from ybq import catalog

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def external_catalog(monkeypatch):
    """Point YBQ_CATALOG at the test fixtures (adds the BQ3_9 candidate table)."""
    monkeypatch.setenv("YBQ_CATALOG", str(FIXTURES / "catalog"))
    return FIXTURES / "catalog"


@pytest.fixture(scope="session")
def shipped_biquandles():
    names = [n for n in catalog.biquandle_names() if catalog.available(n)]
    return {n: catalog.biquandle(n) for n in names}


ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion; printed in the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, {})

    def record(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        lines[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
