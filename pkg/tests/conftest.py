import random

import pytest

from matrange.scalars import GaussianRational, Qi
from matrange.selftest import random_invertible, random_matrix, random_poly, random_scalar


@pytest.fixture
def rng():
    return random.Random(20240817)


def qi(s):
    return Qi(s)
