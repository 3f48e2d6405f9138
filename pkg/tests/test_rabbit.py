import random
from fractions import Fraction as F

import pytest

from zonodeep.errors import DomainError
from zonodeep.exactmath import dist_to_nearest_int
from zonodeep.numtheory import extremal_dimension, rabbit_constants, w_of
from zonodeep.rabbit import (
    RationalAlphaVector,
    extremal_alpha,
    padded_extremal_alpha,
    psi,
    psi_with_witness,
)


def psi_over_window(alpha, span):
    return max(min(dist_to_nearest_int(Q * a) for a in alpha) for Q in range(-span, span + 1))


def test_psi_examples():
    assert psi([F(1, 3)]) == F(1, 3)
    assert psi([F(1, 5), F(2, 5)]) == F(1, 5)
    assert psi_with_witness([F(1, 5), F(2, 5)]) == (F(1, 5), 1)
    assert psi([F(1, 2), F(1, 3)]) == F(1, 3)


def test_alpha_validation():
    with pytest.raises(DomainError):
        RationalAlphaVector([F(1, 2), 1])
    assert RationalAlphaVector([F(7, 3)]) == (F(1, 3),)


def test_extremal_alpha_examples():
    assert extremal_alpha(5) == (F(1, 5), F(2, 5))
    assert extremal_alpha(12) == (F(1, 12), F(5, 12), F(1, 2), F(1, 3))
    assert extremal_alpha(7) == (F(1, 7), F(2, 7), F(3, 7))


@pytest.mark.parametrize("z", range(3, 21))
def test_extremal_alpha_attains_one_over_z(z):
    alpha = extremal_alpha(z)
    assert len(alpha) == extremal_dimension(z)
    assert psi(alpha) == F(1, z)
    assert psi_over_window(alpha, 2 * alpha.common_denominator) == F(1, z)


@pytest.mark.parametrize("d", range(1, 13))
def test_padded_vector_attains_the_constant(d):
    alpha = padded_extremal_alpha(d)
    assert len(alpha) == d
    assert psi(alpha) == rabbit_constants(d).rab == F(1, w_of(d))


def test_random_vectors_respect_the_lower_bound():
    rng = random.Random(2024)
    for _ in range(200):
        d = rng.randint(1, 4)
        alpha = []
        for _ in range(d):
            q = rng.randint(2, 30)
            p = rng.randint(1, q - 1)
            alpha.append(F(p, q))
        assert psi(alpha) >= rabbit_constants(d).rab


def test_periodicity():
    rng = random.Random(9)
    for _ in range(30):
        alpha = RationalAlphaVector(F(rng.randint(1, 11), 12) for _ in range(3))
        if any(a == 0 for a in alpha):
            continue
        assert psi(alpha) == psi_over_window(alpha, 2 * alpha.common_denominator)


def test_listed_examples():
    assert psi([F(1, 2)]) == F(1, 2)
    assert extremal_alpha(8) == (F(1, 8), F(3, 8), F(1, 2))
    assert extremal_alpha(10) == (F(1, 10), F(3, 10), F(1, 2), F(1, 5))
    assert extremal_alpha(3) == (F(1, 3),)
    assert padded_extremal_alpha(12) == (F(1, 60),) + extremal_alpha(60)
    assert padded_extremal_alpha(2) == (F(1, 5), F(2, 5))
    assert padded_extremal_alpha(1) == (F(1, 3),)
