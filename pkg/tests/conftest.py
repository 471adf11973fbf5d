import pytest

from genxmod.fixtures import a3_s3, gx1, gx3
from genxmod.search import standard_pool


@pytest.fixture(scope="session")
def pool4():
    return standard_pool(4)


@pytest.fixture(scope="session")
def pool6():
    return standard_pool(6)


@pytest.fixture(scope="session")
def pool8():
    return standard_pool(8)


@pytest.fixture(scope="session")
def base_gx1():
    return gx1()


@pytest.fixture(scope="session")
def base_gx3():
    return gx3()


@pytest.fixture(scope="session")
def base_a3s3():
    return a3_s3()
