"""Totient-based constants of the lonely rabbit problem.

``w(d)`` is the largest ``z`` with ``phi(z)/2 + h(z) <= d``; the lonely
rabbit constant is ``1/w(d)`` and the inhomogeneous approximation radius
is ``1/2 - 1/w(d)``.  Growth: ``rab(d) * d * log log d`` tends to
``exp(-2 * euler_gamma)``, so ``w(d) - 1`` is of order ``d log log d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError


def prime_factors(z: int) -> list[int]:
    """Distinct prime factors of ``z`` in increasing order (trial division)."""
    if z < 1:
        raise DomainError(f"z must be positive, got {z}")
    primes = []
    p = 2
    while p * p <= z:
        if z % p == 0:
            primes.append(p)
            while z % p == 0:
                z //= p
        p += 1 if p == 2 else 2
    if z > 1:
        primes.append(z)
    return primes


def is_prime(z: int) -> bool:
    return z >= 2 and prime_factors(z) == [z]


@lru_cache(maxsize=4096)
def euler_phi(z: int) -> int:
    if z < 1:
        raise DomainError(f"euler_phi needs z >= 1, got {z}")
    result = z
    for p in prime_factors(z):
        result = result // p * (p - 1)
    return result


def h_of(z: int) -> int:
    """0 for primes, number of distinct prime divisors for composites."""
    if z < 2:
        raise DomainError(f"h(z) is defined for z >= 2, got {z}")
    primes = prime_factors(z)
    return 0 if primes == [z] else len(primes)


def coprime_half_set(z: int) -> list[int]:
    """Integers ``1 <= a <= z/2`` coprime to ``z``."""
    if z < 2:
        raise DomainError(f"coprime_half_set needs z >= 2, got {z}")
    return [a for a in range(1, z // 2 + 1) if math.gcd(a, z) == 1]


def extremal_dimension(z: int) -> int:
    """``d(z) = phi(z)/2 + h(z)``, the length of the extremal vector for ``z``."""
    return len(coprime_half_set(z)) + h_of(z)


def w_search_bound(d: int) -> int:
    # phi(z) >= sqrt(z/2) for all z, hence phi(z)/2 > d once z > 8 d^2
    return 8 * d * d + 6


def w_of(d: int) -> int:
    if d < 1:
        raise DomainError(f"w(d) needs d >= 1, got {d}")
    best = 2
    for z in range(2, w_search_bound(d) + 1):
        # doubled to stay in integers: phi(z) + 2 h(z) <= 2 d
        if euler_phi(z) + 2 * h_of(z) <= 2 * d:
            best = z
    return best


@dataclass(frozen=True)
class RabbitConstants:
    d: int
    w: int
    rab: Fraction
    delta: Fraction


def rabbit_constants(d: int) -> RabbitConstants:
    w = w_of(d)
    rab = Fraction(1, w)
    return RabbitConstants(d=d, w=w, rab=rab, delta=Fraction(1, 2) - rab)


def totient_summatory(d: int) -> int:
    if d < 1:
        raise DomainError(f"totient_summatory needs d >= 1, got {d}")
    return sum(euler_phi(ell) for ell in range(1, d + 1))


def sylvester(n: int) -> list[int]:
    """First ``n`` terms of Sylvester's sequence 2, 3, 7, 43, ..."""
    terms: list[int] = []
    product = 1
    for _ in range(n):
        terms.append(product + 1)
        product *= terms[-1]
    return terms


def akn_bound(d: int) -> int:
    """General lattice-polytope bound ``d (2d+1) (s_{2d+1} - 1) - 1``.

    Double exponential in ``d``; ``s_{2d+1}`` has about ``0.1 * 2^(2d+1)``
    decimal digits, so keep ``d`` small.
    """
    if d < 1:
        raise DomainError(f"akn_bound needs d >= 1, got {d}")
    s = sylvester(2 * d + 1)[-1]
    return d * (2 * d + 1) * (s - 1) - 1
