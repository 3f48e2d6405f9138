"""Lattice zonotopes ``Zon(g_1, ..., g_m) = sum_j [0, g_j]``.

Besides membership, lattice-point enumeration and Ehrhart counting, this
module holds the reduction from a zonotope to a lattice parallelepiped
sharing its center: walk from the center through a given interior point
to the boundary, take a facet there, tile that facet by parallelepipeds,
and reflect the tile containing the boundary point through the center.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

import numpy as np

from . import parallelepiped as pep
from .asymmetry import AsymmetryReport, SymmetricZonotopeBody, ca_symmetric
from .errors import (
    DomainError,
    InstanceTooLarge,
    NoInteriorPoint,
    NotInterior,
    NotOnBoundary,
)
from .exactmath import (
    add,
    as_int_vector,
    columns_to_matrix,
    dot,
    gcd_of_minors,
    max_box,
    rank,
    scale,
    solve_linear,
    sub,
    vec,
    vsum,
)

DEFAULT_MAX_GENERATORS = 20
_CHUNK = 1 << 18


class LatticeZonotope:
    """Zonotope with integer generators, based at the origin.

    Generator order is preserved; duplicate, antiparallel and zero
    generators are allowed as long as the generators span ``R^d``.
    """

    def __init__(self, generators: Sequence[Sequence]):
        gens = tuple(as_int_vector(g) for g in generators)
        if not gens:
            raise DomainError("a zonotope needs at least one generator")
        d = len(gens[0])
        if len(gens) < d:
            raise DomainError(f"need at least {d} generators, got {len(gens)}")
        self.body = SymmetricZonotopeBody(gens)
        self.generators = gens
        self.dim = d

    def __repr__(self):
        return f"LatticeZonotope({[list(g) for g in self.generators]})"

    @classmethod
    def from_parallelepiped(cls, P: pep.LatticeParallelepiped) -> "LatticeZonotope":
        if any(P.base):
            raise DomainError("only parallelepipeds based at the origin are zonotopes here")
        return cls(P.generators)

    @cached_property
    def twice_center(self) -> tuple:
        return vsum(self.generators, self.dim)

    @cached_property
    def center(self) -> tuple:
        return tuple(Fraction(x, 2) for x in self.twice_center)

    @cached_property
    def bounding_box(self) -> tuple[tuple, tuple]:
        lo = tuple(sum(min(0, g[i]) for g in self.generators) for i in range(self.dim))
        hi = tuple(sum(max(0, g[i]) for g in self.generators) for i in range(self.dim))
        return lo, hi

    def norm(self, x: Sequence) -> Fraction:
        """Gauge of ``x`` relative to the center; ``<= 1`` means ``x`` is in ``Z``."""
        return self.body.norm(sub(vec(x), self.center))

    def vertices_of(self, indices: Sequence[int]) -> list[tuple]:
        pts = [(0,) * self.dim]
        for j in indices:
            pts += [add(p, self.generators[j]) for p in pts]
        return pts


def contains(Z: LatticeZonotope, x: Sequence, strict: bool = False) -> bool:
    nu = Z.norm(x)
    return nu < 1 if strict else nu <= 1


# -- lattice points -----------------------------------------------------------


def _scan_box(Z: LatticeZonotope, strict: bool, limit: int | None) -> list[tuple]:
    limit = max_box() if limit is None else limit
    lo, hi = Z.bounding_box
    shape = tuple(b - a + 1 for a, b in zip(lo, hi))
    total = math.prod(shape)
    if total > limit:
        raise InstanceTooLarge(f"bounding box has {total} lattice points (limit {limit})")
    facets = Z.body.facets
    U = [f.normal for f in facets]
    widths = [f.width for f in facets]
    shift = [dot(u, Z.twice_center) for u in U]
    # |u . (2x - 2c)| against the facet width, all in integers
    reach = max(max(abs(a), abs(b)) for a, b in zip(lo, hi))
    magnitude = max(2 * reach * sum(abs(c) for c in u) + abs(s) for u, s in zip(U, shift))
    dtype = np.int64 if magnitude < 2**62 else object
    U_arr = np.array(U, dtype=dtype).T
    w_arr = np.array(widths, dtype=dtype)
    s_arr = np.array(shift, dtype=dtype)
    lo_arr = np.array(lo, dtype=dtype)
    found = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total))
        X = np.stack(np.unravel_index(idx, shape), axis=1).astype(dtype) + lo_arr
        vals = np.abs(2 * X.dot(U_arr) - s_arr)
        ok = (vals < w_arr) if strict else (vals <= w_arr)
        keep = X[np.all(ok, axis=1)]
        found.extend(tuple(int(c) for c in row) for row in keep)
    return found


def interior_lattice_points(Z: LatticeZonotope, limit: int | None = None) -> list[tuple]:
    """All lattice points strictly inside ``Z``, lexicographically sorted."""
    return _scan_box(Z, strict=True, limit=limit)


def lattice_points(Z: LatticeZonotope, limit: int | None = None) -> list[tuple]:
    """All lattice points of the closed zonotope, lexicographically sorted."""
    return _scan_box(Z, strict=False, limit=limit)


def ca(Z: LatticeZonotope, w: Sequence) -> AsymmetryReport:
    return ca_symmetric(Z.body, Z.center, w)


# -- facets and their tilings -------------------------------------------------


@dataclass(frozen=True)
class FacetDescription:
    """``F = Zon(g_S) + sum_{j not in S} eps_j g_j`` with outer normal ``normal``."""

    normal: tuple
    spanning_indices: tuple
    offset_signs: dict

    @property
    def offset_indices(self) -> tuple:
        return tuple(j for j, e in sorted(self.offset_signs.items()) if e == 1)


def _describe_facet(Z: LatticeZonotope, outer: tuple) -> FacetDescription:
    S, signs = [], {}
    for j, g in enumerate(Z.generators):
        s = dot(outer, g)
        if s == 0:
            S.append(j)
        else:
            signs[j] = 1 if s > 0 else 0
    return FacetDescription(normal=outer, spanning_indices=tuple(S), offset_signs=signs)


def facets(Z: LatticeZonotope) -> list[FacetDescription]:
    """Both facets of every +/- normal pair."""
    out = []
    for f in Z.body.facets:
        u = f.normal
        out.append(_describe_facet(Z, u))
        out.append(_describe_facet(Z, tuple(-x for x in u)))
    return out


def facet_offset(Z: LatticeZonotope, F: FacetDescription) -> tuple:
    return vsum((Z.generators[j] for j in F.offset_indices), Z.dim)


def facet_through(Z: LatticeZonotope, p: Sequence) -> FacetDescription:
    """A facet containing the boundary point ``p``.

    Facets are tried in the order of their spanning generator subsets
    (lexicographic), so ties at lower-dimensional faces resolve
    deterministically.
    """
    p = vec(p)
    two_p_minus_c = sub(scale(2, p), Z.twice_center)
    if Z.body.norm(scale(Fraction(1, 2), two_p_minus_c)) != 1:
        raise NotOnBoundary(f"{tuple(p)} is not on the boundary")
    for f in Z.body.facets:
        s = dot(f.normal, two_p_minus_c)
        if abs(s) == f.width:
            outer = f.normal if s > 0 else tuple(-x for x in f.normal)
            return _describe_facet(Z, outer)
    raise NotOnBoundary(f"{tuple(p)} lies on no facet")  # pragma: no cover


@dataclass(frozen=True)
class PavingCell:
    """Translate of the parallelepiped spanned by ``d - 1`` facet generators."""

    spanning: tuple
    translation: tuple
    generators: tuple


def _in_hyperplane_coords(basis: Sequence[Sequence], normal: Sequence, x: Sequence) -> tuple:
    """Coefficients of ``x`` in ``basis`` (``x`` must lie in their span)."""
    coeffs = solve_linear(columns_to_matrix(list(basis) + [normal]), x)
    if coeffs[-1] != 0:
        raise ValueError("vector leaves the facet hyperplane")
    return coeffs[:-1]


def _lift_heights(Z: LatticeZonotope, S: Sequence[int], bases, normal) -> dict:
    """Heights ``K^position`` for the facet generators, with the smallest
    ``K >= 2`` giving a generic lift (no generator on a basis hyperplane).
    """
    expansions = {}
    for B in bases:
        gens = [Z.generators[b] for b in B]
        for j in S:
            if j not in B:
                expansions[B, j] = _in_hyperplane_coords(gens, normal, Z.generators[j])
    pos = {j: i for i, j in enumerate(S)}
    K = 2
    while True:
        heights = {j: Fraction(K) ** pos[j] for j in S}
        if all(
            sum(l * heights[b] for l, b in zip(lam, B)) != heights[j]
            for (B, j), lam in expansions.items()
        ):
            return heights, expansions
        K += 1


def pave_facet(F: FacetDescription, Z: LatticeZonotope) -> list[PavingCell]:
    """Tile the facet ``F`` by parallelepipeds, one per basis among its generators.

    The tiling is the regular one induced by lifting generator ``j`` of the
    facet to height ``K^j``: for each basis ``B`` the lower face of the
    lifted zonotope spanned by ``B`` picks up exactly the remaining
    generators that lie below the hyperplane through the lifted ``B``.
    Cells come out sorted by spanning subset.
    """
    d = Z.dim
    S = F.spanning_indices
    base = facet_offset(Z, F)
    bases = [B for B in combinations(S, d - 1) if rank([Z.generators[b] for b in B]) == d - 1]
    heights, expansions = _lift_heights(Z, S, bases, F.normal)
    cells = []
    for B in bases:
        shift = base
        for j in S:
            if j in B:
                continue
            lam = expansions[B, j]
            if sum(l * heights[b] for l, b in zip(lam, B)) > heights[j]:
                shift = add(shift, Z.generators[j])
        cells.append(PavingCell(B, shift, tuple(Z.generators[b] for b in B)))
    return cells


def cell_contains(cell: PavingCell, normal: Sequence, x: Sequence, strict: bool = False) -> bool:
    """Is ``x`` in the (relatively open, if ``strict``) cell?"""
    rel = sub(vec(x), cell.translation)
    if dot(normal, rel) != 0:
        return False
    coeffs = _in_hyperplane_coords(cell.generators, normal, rel)
    if strict:
        return all(0 < a < 1 for a in coeffs)
    return all(0 <= a <= 1 for a in coeffs)


# -- Steinitz reduction and the deep point pipeline ---------------------------


def boundary_point(Z: LatticeZonotope, v: Sequence) -> tuple:
    """Where the ray from the center through ``v`` leaves ``Z`` (direction
    ``e_1`` when ``v`` is the center)."""
    r = sub(vec(v), Z.center)
    if not any(r):
        r = tuple(Fraction(int(i == 0)) for i in range(Z.dim))
    return add(Z.center, scale(1 / Z.body.norm(r), r))


def steinitz_reduce(Z: LatticeZonotope, v: Sequence) -> pep.LatticeParallelepiped:
    """Lattice parallelepiped inside ``Z``, centered at ``Z``'s center, with
    ``v`` in its interior."""
    if not contains(Z, v, strict=True):
        raise NotInterior(f"{tuple(v)} is not interior to {Z!r}")
    p = boundary_point(Z, v)
    F = facet_through(Z, p)
    cell = next(c for c in pave_facet(F, Z) if cell_contains(c, F.normal, p))
    # conv(Q, 2c - Q) = Q + [0, t] with t = 2c - 2 q0 - sum(Q's generators)
    t = sub(sub(Z.twice_center, scale(2, cell.translation)), vsum(cell.generators, Z.dim))
    return pep.LatticeParallelepiped(cell.translation, cell.generators + (t,))


@dataclass(frozen=True)
class DeepPointResult:
    start: tuple
    parallelepiped: pep.LatticeParallelepiped
    point: tuple
    ca_in_parallelepiped: Fraction
    ca: Fraction
    bound: int


def deep_point_details(Z: LatticeZonotope, limit: int | None = None) -> DeepPointResult:
    interior = interior_lattice_points(Z, limit=limit)
    if not interior:
        raise NoInteriorPoint(f"{Z!r} has no interior lattice point")
    v = interior[0]
    P = steinitz_reduce(Z, v)
    w, ca_p = pep.deep_point(P, v)
    return DeepPointResult(
        start=v,
        parallelepiped=P,
        point=w,
        ca_in_parallelepiped=ca_p,
        ca=ca(Z, w).ca,
        bound=pep.theorem_bound(Z.dim),
    )


def deep_point(Z: LatticeZonotope, limit: int | None = None) -> tuple[tuple, Fraction]:
    """Interior lattice point ``w`` with ``ca(Z, w) <= w(d) - 1``."""
    r = deep_point_details(Z, limit=limit)
    return r.point, r.ca


# -- Ehrhart counting ---------------------------------------------------------


def ehrhart_coefficients(Z: LatticeZonotope, max_generators: int = DEFAULT_MAX_GENERATORS) -> list[int]:
    """``g_0, ..., g_d`` with ``#(kZ cap Z^d) = sum g_i k^i``.

    ``g_i`` sums, over all ``i``-subsets of generators, the gcd of the
    ``i x i`` minors of the corresponding ``d x i`` matrix.
    """
    m = len(Z.generators)
    if m > max_generators:
        raise InstanceTooLarge(f"{m} generators exceed the subset limit {max_generators}")
    coeffs = [1]
    for i in range(1, Z.dim + 1):
        total = 0
        for J in combinations(range(m), i):
            total += gcd_of_minors(columns_to_matrix([Z.generators[j] for j in J]), i)
        coeffs.append(total)
    return coeffs


def count_lattice_points(Z: LatticeZonotope, mode: str = "closed") -> int:
    g = ehrhart_coefficients(Z)
    if mode == "closed":
        return sum(g)
    if mode == "interior":
        return (-1) ** Z.dim * sum((-1) ** i * gi for i, gi in enumerate(g))
    if mode == "volume":
        return g[-1]
    raise ValueError(f"unknown mode {mode!r}")
