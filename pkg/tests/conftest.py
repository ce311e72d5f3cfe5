import pytest

from modcheck.corpus import corpus


@pytest.fixture(scope="session")
def fixtures():
    return corpus()


@pytest.fixture(scope="session")
def fixtures_by_name(fixtures):
    return {f.name: f for f in fixtures}


@pytest.fixture(scope="session")
def base_fixtures(fixtures):
    return tuple(f for f in fixtures if not f.name.endswith("_sq"))
