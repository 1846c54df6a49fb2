import pytest

from normmod import NumberField, find_small_unit


@pytest.fixture(scope="session")
def cubic():
    """Q[x]/(x^3 - 2)."""
    return NumberField([-2, 0, 0, 1])


@pytest.fixture(scope="session")
def eps(cubic):
    """theta - 1, the small norm-1 unit of the cubic field."""
    return cubic.theta() - cubic.one()


@pytest.fixture(scope="session")
def quartic():
    """Q[x]/(x^4 - 2)."""
    return NumberField([-2, 0, 0, 0, 1])


@pytest.fixture(scope="session")
def pell_field():
    """Q[x]/(x^2 - 2)."""
    return NumberField([-2, 0, 1])
