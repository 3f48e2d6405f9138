"""Coefficient of asymmetry for centrally symmetric zonotopes.

For a body ``K = -K`` and an interior point ``w`` the coefficient of
asymmetry is ``(1 + |w|_K) / (1 - |w|_K)``.  The gauge of a zonotope
``sum [-g/2, g/2]`` is evaluated exactly through its facet normals: every
facet normal is orthogonal to a rank ``d - 1`` subset of the generators,
and the support value in direction ``u`` is ``1/2 sum |u . g|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import DomainError, NotInterior
from .exactmath import dot, is_integral, kernel_normal, rank, sub, vec

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Facet:
    """One +/- pair of facet normals of a symmetric zonotope.

    ``spanning`` is the first (lexicographic) generator index subset whose
    kernel produced ``normal``; ``width`` is ``sum |normal . g|``, i.e.
    twice the support value.
    """

    normal: tuple
    spanning: tuple
    width: int


class SymmetricZonotopeBody:
    """The origin-centered zonotope ``sum_i [-g_i/2, g_i/2]``."""

    def __init__(self, generators: Sequence[Sequence]):
        if not all(is_integral(g) for g in generators):
            raise DomainError("generators must be integer vectors")
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        if not gens:
            raise DomainError("a zonotope needs at least one generator")
        self.dim = len(gens[0])
        if any(len(g) != self.dim for g in gens):
            raise DomainError("generators have mixed dimensions")
        if rank(gens) < self.dim:
            raise DomainError("generators do not span the ambient space")
        self.generators = gens

    def __repr__(self):
        return f"SymmetricZonotopeBody({list(self.generators)})"

    @cached_property
    def facets(self) -> tuple[Facet, ...]:
        d = self.dim
        seen = {}
        for subset in combinations(range(len(self.generators)), d - 1):
            vectors = [self.generators[j] for j in subset]
            if rank(vectors) < d - 1:
                continue
            u = kernel_normal(vectors, d)
            if u not in seen:
                width = sum(abs(dot(u, g)) for g in self.generators)
                seen[u] = Facet(u, subset, width)
        return tuple(seen.values())

    def norm(self, x: Sequence) -> Fraction:
        return zonotope_norm(self, x)


def facet_normals(body: SymmetricZonotopeBody) -> list[tuple]:
    """Primitive facet normals, one per +/- pair, in subset-enumeration order."""
    return [f.normal for f in body.facets]


def zonotope_norm(body: SymmetricZonotopeBody, x: Sequence) -> Fraction:
    x = vec(x)
    best = Fraction(0)
    for f in body.facets:
        value = 2 * abs(dot(f.normal, x)) / f.width
        if value > best:
            best = value
    return best


def ca_from_norm(nu) -> Fraction:
    nu = Fraction(nu)
    if nu < 0:
        raise DomainError(f"norm value must be nonnegative, got {nu}")
    if nu >= 1:
        raise DomainError(f"norm value {nu} >= 1: point is not interior")
    return (1 + nu) / (1 - nu)


@dataclass(frozen=True)
class AsymmetryReport:
    point: tuple
    norm_value: Fraction
    ca: Fraction


def ca_symmetric(body: SymmetricZonotopeBody, center: Sequence, w: Sequence) -> AsymmetryReport:
    """ca of ``w`` in ``center + body``."""
    nu = zonotope_norm(body, sub(vec(w), vec(center)))
    if nu >= 1:
        raise NotInterior(f"point {tuple(w)} is not interior (norm {nu})")
    return AsymmetryReport(point=tuple(w), norm_value=nu, ca=ca_from_norm(nu))


def max_center_deviation(alphas: Sequence) -> Fraction:
    return max(abs(Fraction(a) - HALF) for a in alphas)


def ca_parallelepiped(alphas: Sequence) -> Fraction:
    """ca of the point with generator coefficients ``alphas`` in a parallelepiped."""
    alphas = vec(alphas)
    if not alphas:
        raise DomainError("need at least one coefficient")
    for a in alphas:
        if not 0 < a < 1:
            raise DomainError(f"coefficient {a} is not in (0, 1)")
    m = max_center_deviation(alphas)
    return (HALF + m) / (HALF - m)
