from __future__ import annotations

import pytest

from pathlattice.fixtures import fixtures, generated_general, generated_st_plane, drawn_fixtures
from pathlattice.verify import OrderTable, enumerate_simple_paths

# lines printed at the end of the run by the acceptance suite
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def catalog():
    return fixtures()


@pytest.fixture(scope="session")
def drawn():
    return drawn_fixtures()


@pytest.fixture(scope="session")
def st_plane_fixtures():
    return generated_st_plane()


@pytest.fixture(scope="session")
def general_fixtures():
    return generated_general()


_TABLES: dict[str, OrderTable] = {}


def table_for(fixture) -> OrderTable:
    """Order table of a fixture's full path set, cached per fixture name."""
    t = _TABLES.get(fixture.name)
    if t is None:
        t = OrderTable(enumerate_simple_paths(fixture.graph))
        _TABLES[fixture.name] = t
    return t


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
