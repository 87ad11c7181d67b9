import pytest

from tests.support import ideal, ring


@pytest.fixture
def qxy():
    return ring("Q[x,y]")


@pytest.fixture
def qxyz():
    return ring("Q[x,y,z]")


@pytest.fixture
def qxyzw():
    return ring("Q[x,y,z,w]")


@pytest.fixture
def infinite_ideal():
    """(x^2, y^3 - xy): m-primary, its powers keep non-standard generators."""
    return ideal("(x^2, y^3 - x*y)", ring("Q[x,y]"))


@pytest.fixture
def cover_ideal():
    return ideal("(x*y, x*z, y*z)", ring("Q[x,y,z]"))


@pytest.fixture
def marc_ideal():
    return ideal("(x*w - y*z, x^2, z^2)", ring("Q[x,y,z,w]"))
