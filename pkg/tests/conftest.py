import random

import pytest

from lcft.extension import TameAbelianExtension

# the standing verification matrix: one extension per interesting shape
MATRIX_PARAMS = {
    "unram_f2": (3, 1, 2, 1, "1"),
    "ram_e2": (5, 1, 1, 2, "1"),
    "ram_e4": (5, 1, 1, 4, "1"),
    "mixed_c9": (2, 2, 3, 3, "g"),
    "split_c3c3": (2, 2, 3, 3, "1"),
    "deg12": (7, 1, 2, 6, "1"),
    "mixed_e2_split": (3, 1, 2, 2, "1"),
    "mixed_e2_cyclic": (3, 1, 2, 2, "g"),
}


@pytest.fixture(scope="session")
def matrix():
    return {name: TameAbelianExtension.from_parameters(*params)
            for name, params in MATRIX_PARAMS.items()}


@pytest.fixture()
def rng():
    return random.Random(20260808)
