import pytest

from sdcodes import fixture, from_generator


@pytest.fixture(scope="session")
def fixture_codes():
    return {name: from_generator(fixture(name)) for name in ("G1", "G2", "G3", "G4", "G5", "G6")}
