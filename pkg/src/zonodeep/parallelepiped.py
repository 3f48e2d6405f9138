"""Lattice parallelepipeds, the jump to a deep interior point, and the
extremal parallelepipeds ``P^z`` and their lifts ``P(d)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .asymmetry import HALF, ca_parallelepiped, max_center_deviation
from .errors import DomainError, InstanceTooLarge, NotInterior
from .exactmath import (
    add,
    as_int_vector,
    columns_to_matrix,
    det,
    frac_part,
    is_integral,
    lcm_of_denominators,
    max_box,
    solve_linear,
    sub,
    vec,
)
from .numtheory import extremal_dimension, w_of
from .rabbit import extremal_alpha


@dataclass(frozen=True)
class LatticeParallelepiped:
    """``base + sum_i [0, v_i]`` with ``d`` independent integer generators."""

    base: tuple
    generators: tuple

    def __post_init__(self):
        base = as_int_vector(self.base)
        gens = tuple(as_int_vector(v) for v in self.generators)
        d = len(base)
        if len(gens) != d or any(len(v) != d for v in gens):
            raise DomainError(f"need {d} generators of length {d}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "generators", gens)
        if self.determinant == 0:
            raise DomainError("generators are linearly dependent")

    @classmethod
    def from_generators(cls, generators: Sequence[Sequence], base: Sequence | None = None):
        generators = [tuple(v) for v in generators]
        if base is None:
            base = (0,) * len(generators[0])
        return cls(tuple(base), tuple(generators))

    @property
    def dim(self) -> int:
        return len(self.base)

    @cached_property
    def matrix(self) -> tuple:
        return columns_to_matrix(self.generators)

    @cached_property
    def determinant(self) -> int:
        return int(det(columns_to_matrix(self.generators)))

    @cached_property
    def center(self) -> tuple:
        return add(self.base, tuple(HALF * sum(col) for col in zip(*self.generators)))

    def vertices(self) -> list[tuple]:
        out = []
        for mask in itertools.product((0, 1), repeat=self.dim):
            v = self.base
            for bit, g in zip(mask, self.generators):
                if bit:
                    v = add(v, g)
            out.append(v)
        return out

    def point(self, alphas: Sequence) -> tuple:
        """``base + sum alpha_i v_i``."""
        x = self.base
        for a, g in zip(alphas, self.generators, strict=True):
            x = add(x, tuple(a * gi for gi in g))
        return x


def coefficients_of(P: LatticeParallelepiped, w: Sequence) -> tuple:
    return solve_linear(P.matrix, sub(vec(w), P.base))


def is_interior(P: LatticeParallelepiped, w: Sequence) -> bool:
    return all(0 < a < 1 for a in coefficients_of(P, w))


def _coset_coefficients(P: LatticeParallelepiped) -> list[tuple]:
    """Coefficient vectors of the lattice points of the half-open cell.

    These form the finite group ``V^{-1} Z^d / Z^d`` of order ``|det V|``,
    generated by the fractional parts of the columns of ``V^{-1}``.
    """
    d = P.dim
    steps = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        steps.append(tuple(frac_part(x) for x in solve_linear(P.matrix, e)))
    zero = (Fraction(0),) * d
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for a in frontier:
            for s in steps:
                b = tuple(frac_part(x + y) for x, y in zip(a, s))
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return list(seen)


def _box_points(P: LatticeParallelepiped, limit: int):
    verts = P.vertices()
    lo = [min(v[i] for v in verts) for i in range(P.dim)]
    hi = [max(v[i] for v in verts) for i in range(P.dim)]
    size = 1
    for a, b in zip(lo, hi):
        size *= b - a + 1
    if size > limit:
        raise InstanceTooLarge(f"bounding box has {size} lattice points (limit {limit})")
    return itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))


def interior_lattice_points(
    P: LatticeParallelepiped, limit: int | None = None, method: str = "cosets"
) -> list[tuple]:
    """Interior lattice points of ``P``, sorted lexicographically.

    ``method="cosets"`` walks the ``|det V|`` residues of ``Z^d`` modulo the
    generator lattice; ``method="box"`` scans the integer bounding box and
    tests every point.  Both raise :class:`InstanceTooLarge` past ``limit``.
    """
    limit = max_box() if limit is None else limit
    if method == "box":
        return sorted(tuple(x) for x in _box_points(P, limit) if is_interior(P, x))
    if method != "cosets":
        raise ValueError(f"unknown method {method!r}")
    if abs(P.determinant) > limit:
        raise InstanceTooLarge(f"|det| = {abs(P.determinant)} exceeds limit {limit}")
    points = []
    for alphas in _coset_coefficients(P):
        if all(a != 0 for a in alphas):
            points.append(tuple(int(x) for x in P.point(alphas)))
    return sorted(points)


def half_open_lattice_points(P: LatticeParallelepiped, limit: int | None = None) -> list[tuple]:
    """Lattice points of ``base + V [0, 1)^d``; there are exactly ``|det V|``."""
    limit = max_box() if limit is None else limit
    if abs(P.determinant) > limit:
        raise InstanceTooLarge(f"|det| = {abs(P.determinant)} exceeds limit {limit}")
    return sorted(tuple(int(x) for x in P.point(a)) for a in _coset_coefficients(P))


def best_multiplier(alphas: Sequence) -> tuple[int, Fraction]:
    """Smallest ``Q`` in one period minimizing ``max_i |frac(Q alpha_i) - 1/2|``."""
    alphas = vec(alphas)
    best_q, best_dev = 0, None
    for Q in range(lcm_of_denominators(alphas)):
        dev = max_center_deviation(frac_part(Q * a) for a in alphas)
        if best_dev is None or dev < best_dev:
            best_q, best_dev = Q, dev
    return best_q, best_dev


def deep_point(P: LatticeParallelepiped, w: Sequence) -> tuple[tuple, Fraction]:
    """Jump from the interior lattice point ``w`` to a deep one.

    Returns ``(w', ca(P, w'))`` where ``w' = base + sum frac(Q alpha_i) v_i``
    for the best multiplier ``Q``; ``ca(P, w') <= w(d) - 1``.
    """
    if not is_integral(w):
        raise NotInterior(f"{tuple(w)} is not a lattice point")
    alphas = coefficients_of(P, w)
    if not all(0 < a < 1 for a in alphas):
        raise NotInterior(f"{tuple(w)} is not interior to the parallelepiped")
    Q, _ = best_multiplier(alphas)
    jumped = tuple(frac_part(Q * a) for a in alphas)
    point = tuple(int(x) for x in P.point(jumped))
    return point, ca_parallelepiped(jumped)


def theorem_bound(d: int) -> int:
    """``w(d) - 1``, the guaranteed ca of the jumped point."""
    return w_of(d) - 1


def extremal_first_generator(z: int) -> tuple:
    alpha = extremal_alpha(z)
    return (z,) + tuple(int(z * a) for a in alpha[1:])


def extremal_parallelepiped(z: int) -> LatticeParallelepiped:
    """``P^z = [0, v^z] + [0, e_2] + ... + [0, e_{d(z)}]``."""
    if z < 3:
        raise DomainError(f"extremal_parallelepiped needs z >= 3, got {z}")
    d = extremal_dimension(z)
    gens = [extremal_first_generator(z)]
    for i in range(1, d):
        e = [0] * d
        e[i] = 1
        gens.append(tuple(e))
    return LatticeParallelepiped.from_generators(gens)


def lifted_extremal(d: int) -> LatticeParallelepiped:
    """``P^{w(d)}`` embedded in dimension ``d`` and padded with ``[0, 2 e_j]``."""
    if d < 1:
        raise DomainError(f"lifted_extremal needs d >= 1, got {d}")
    core = extremal_parallelepiped(w_of(d))
    k = core.dim
    gens = [tuple(g) + (0,) * (d - k) for g in core.generators]
    for j in range(k, d):
        e = [0] * d
        e[j] = 2
        gens.append(tuple(e))
    return LatticeParallelepiped.from_generators(gens)
