import pytest

from interlingua_mt import fixtures
from interlingua_mt.lexicon import load_thesaurus


@pytest.fixture(scope="session")
def resources():
    return fixtures.default_resources()


@pytest.fixture(scope="session")
def thesaurus():
    return load_thesaurus(fixtures.THESAURUS)


@pytest.fixture(scope="session")
def vocab10k():
    return fixtures.synthetic_vocabulary(10_000, seed=0)
