import pytest

from perceprice import embedded_corpus


@pytest.fixture(scope="session")
def corpus():
    # Immutable after construction, so one instance serves every test.
    return embedded_corpus()
