import pytest

from ttow import QQ, PrimeField

F5 = PrimeField(5)
F7 = PrimeField(7)
F101 = PrimeField(101)


@pytest.fixture
def f101():
    return F101


@pytest.fixture
def f5():
    return F5
