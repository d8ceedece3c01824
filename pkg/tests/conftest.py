import pytest

from horadam.console import set_quiet
from horadam.sequences import WITNESSES, builtin


@pytest.fixture(autouse=True)
def quiet_logging():
    set_quiet(True)
    yield
    set_quiet(False)


@pytest.fixture
def fib():
    return builtin('F')


@pytest.fixture
def witness_pair():
    return WITNESSES['X'], WITNESSES['Y']
