import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from codedist.code import AmbientSpace, LinearCode  # noqa: E402
from codedist.field import GF  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def random_code(rng, q, ambient, k):
    """A random code of dimension at most k (rows drawn uniformly)."""
    F = GF(q)
    rows = rng.integers(0, q, size=(k, ambient.N))
    return LinearCode(F, ambient, rows)


def random_nonzero_code(rng, q, ambient, k):
    while True:
        C = random_code(rng, q, ambient, k)
        if C.k >= 1:
            return C


def oracle_gens(C):
    return [tuple(int(x) for x in r) for r in C.gen]


DESK_AMBIENTS = [
    (2, AmbientSpace.hamming(4)),
    (2, AmbientSpace.hamming(5)),
    (2, AmbientSpace.hamming(6)),
    (3, AmbientSpace.hamming(4)),
    (3, AmbientSpace.hamming(5)),
    (4, AmbientSpace.hamming(4)),
    (5, AmbientSpace.hamming(3)),
    (2, AmbientSpace.rank(2, 2)),
    (2, AmbientSpace.rank(2, 3)),
    (2, AmbientSpace.rank(3, 2)),
    (3, AmbientSpace.rank(2, 2)),
    (2, AmbientSpace.sumrank([(2, 2), (1, 1)])),
    (2, AmbientSpace.sumrank([(1, 2), (2, 1), (1, 1)])),
]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
