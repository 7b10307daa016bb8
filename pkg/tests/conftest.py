import pathlib

import pytest

import recurrence_bounds
from recurrence_bounds import RecurrenceSystem, read_system_file

SYSTEMS_DIR = pathlib.Path(recurrence_bounds.__file__).parent / "static" / "systems"


@pytest.fixture(name="systems_dir")
def fixture_systems_dir() -> pathlib.Path:
    return SYSTEMS_DIR


@pytest.fixture(name="ex_sharp")
def fixture_ex_sharp() -> RecurrenceSystem:
    return read_system_file(SYSTEMS_DIR / "ex_sharp.sys")


@pytest.fixture(name="eigenring", scope="session")
def fixture_eigenring() -> RecurrenceSystem:
    return read_system_file(SYSTEMS_DIR / "eigenring.sys")


@pytest.fixture(name="diag_x_1")
def fixture_diag_x_1() -> RecurrenceSystem:
    return read_system_file(SYSTEMS_DIR / "diag_x_1.sys")
