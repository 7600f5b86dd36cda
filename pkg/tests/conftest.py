import random

import pytest

from pelp.gf import Field


def make_codeword(field: Field, gen_rows, rng: random.Random):
    """Random combination of generator rows."""
    n = len(gen_rows[0]) if gen_rows else 0
    word = [0] * n
    for row in gen_rows:
        c = rng.randrange(field.order)
        if c:
            for j, v in enumerate(row):
                if v:
                    word[j] = field.add(word[j], field.mul(c, v))
    return tuple(word)


def add_error(field: Field, word, positions, rng: random.Random):
    """Flip exactly the given positions by uniformly random nonzero values."""
    y = list(word)
    for p in positions:
        y[p] = field.add(y[p], rng.randrange(1, field.order))
    return tuple(y)


def random_error_word(field, gen_rows, n, t, rng):
    c = make_codeword(field, gen_rows, rng)
    pos = rng.sample(range(n), t)
    y = add_error(field, c, pos, rng)
    return c, y, tuple(sorted(pos))


@pytest.fixture
def rng():
    return random.Random(0xC0DEC)
