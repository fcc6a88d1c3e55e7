import numpy as np
import pytest

from nccgeo.bridge import sl2_model
from nccgeo.grading import canonical_euler, symmetric_structure
from nccgeo.jts import triple_system
from nccgeo.liecore import build_algebra


@pytest.fixture(scope="session")
def sl2():
    return sl2_model(sample_count=256, seed=0)


@pytest.fixture(scope="session")
def sl3_structure():
    alg = build_algebra("sl", [3])
    return symmetric_structure(canonical_euler(alg, "h1"))


@pytest.fixture(scope="session")
def sl3_ts(sl3_structure):
    return triple_system(sl3_structure)


@pytest.fixture(scope="session")
def sl2_ts(sl2):
    return triple_system(sl2.structure)


@pytest.fixture
def rng():
    return np.random.default_rng(20240809)
