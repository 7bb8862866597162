import os

import pytest
from hypothesis import settings
from hypothesis.database import DirectoryBasedExampleDatabase

from xmodcat import corpus
from xmodcat.settings import _SETTINGS


local = DirectoryBasedExampleDatabase(".hypothesis/examples")

# Every example builds character tables and explicit representations, so per-example timing is meaningless.
settings.register_profile("ci", database=local, deadline=None, max_examples=50)
settings.register_profile("dev", database=local, deadline=None, max_examples=20)
settings.load_profile("ci" if os.environ.get("CI") else "dev")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for setting in _SETTINGS.values():
        monkeypatch.delenv(setting.envvar, raising=False)


@pytest.fixture
def d_z2():
    return corpus.lookup("d_z2")


@pytest.fixture
def d_s3():
    return corpus.lookup("d_s3")


@pytest.fixture
def x4():
    return corpus.lookup("x4_double_cover")


@pytest.fixture
def z3_inversion():
    return corpus.lookup("z3_inversion")


@pytest.fixture
def trivial_boundary_z2():
    return corpus.lookup("trivial_boundary_z2")
