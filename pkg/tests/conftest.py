import random

import pytest

from sympfaff.tableaux import Tableau


def random_even_rows(rng: random.Random, r: int, cells: int):
    """Random even-tableau rows with entries in the rank-r alphabet."""
    alphabet = [s for s in range(-r, r + 1) if s]
    rows = []
    left = cells
    while left > 0:
        length = min(rng.choice([2, 2, 2, 4]), left)
        rows.append(tuple(rng.choice(alphabet) for _ in range(length)))
        left -= length
    return tuple(rows)


@pytest.fixture
def rng():
    return random.Random(20240813)


def random_even_tableau(rng: random.Random, r: int, cells: int) -> Tableau:
    return Tableau(random_even_rows(rng, r, cells))
