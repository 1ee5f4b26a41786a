import pytest

from lagrangian.battery import algebra


@pytest.fixture(scope="session")
def sl2():
    return algebra("A1")


@pytest.fixture(scope="session")
def sl3():
    return algebra("A2")
