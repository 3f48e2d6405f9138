"""The discrete loneliness functional and its extremal vectors.

For rational non-integral ``alpha`` the value ``min_i |Q alpha_i|_Z`` is
periodic in ``Q`` with period the common denominator ``N``, so the
supremum over all integers ``Q`` is a maximum over ``0 <= Q < N``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .exactmath import dist_to_nearest_int, frac_part, lcm_of_denominators
from .numtheory import coprime_half_set, extremal_dimension, prime_factors, w_of


class RationalAlphaVector(tuple):
    """Tuple of rationals in (0, 1), none integral, reduced mod 1."""

    def __new__(cls, entries: Iterable):
        values = []
        for x in entries:
            x = Fraction(x)
            if x.denominator == 1:
                raise DomainError(f"entry {x} is integral")
            values.append(frac_part(x))
        if not values:
            raise DomainError("alpha vector is empty")
        return super().__new__(cls, values)

    @property
    def common_denominator(self) -> int:
        return lcm_of_denominators(self)

    def __repr__(self):
        return "RationalAlphaVector(" + ", ".join(str(x) for x in self) + ")"


def min_distance(alpha, Q: int) -> Fraction:
    return min(dist_to_nearest_int(Q * a) for a in alpha)


def psi_with_witness(alpha) -> tuple[Fraction, int]:
    """``(psi(alpha), Q)`` with ``Q`` the smallest maximizer in one period."""
    alpha = alpha if isinstance(alpha, RationalAlphaVector) else RationalAlphaVector(alpha)
    best, best_q = Fraction(-1), 0
    for Q in range(alpha.common_denominator):
        value = min_distance(alpha, Q)
        if value > best:
            best, best_q = value, Q
    return best, best_q


def psi(alpha) -> Fraction:
    return psi_with_witness(alpha)[0]


def extremal_alpha(z: int) -> RationalAlphaVector:
    """Coprime half-set over ``z``, then ``1/p`` for each prime ``p | z`` if composite."""
    if z < 3:
        raise DomainError(f"extremal_alpha needs z >= 3, got {z}")
    entries = [Fraction(a, z) for a in coprime_half_set(z)]
    primes = prime_factors(z)
    if primes != [z]:
        entries += [Fraction(1, p) for p in primes]
    return RationalAlphaVector(entries)


def padded_extremal_alpha(d: int) -> RationalAlphaVector:
    """Extremal vector for ``w(d)`` grown to length ``d`` with copies of ``1/w(d)``."""
    z = w_of(d)
    pad = d - extremal_dimension(z)
    return RationalAlphaVector([Fraction(1, z)] * pad + list(extremal_alpha(z)))
