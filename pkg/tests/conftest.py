import pytest

from quintuple.tuples import enumerate_tuples


@pytest.fixture(scope="session")
def triples_200():
    return enumerate_tuples(200, 3)
