import pytest

from edgeconn import connected_level


@pytest.fixture(scope="session")
def levels6():
    """Connected graphs per order through n=6, shared across the session."""
    return {n: connected_level(n) for n in range(1, 7)}


@pytest.fixture(scope="session")
def levels7():
    return {n: connected_level(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def levels8():
    return {n: connected_level(n) for n in range(1, 9)}
