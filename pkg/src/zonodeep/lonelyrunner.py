"""Velocity vectors, the gap of loneliness, and the lonely runner zonohedron.

The zonohedron ``Z(n) = Rn + [0,1]^d`` is symmetric about
``c_n = (1 + n)/2`` and its gauge is a one-dimensional minimax over the
recession line: ``|x| = min_t max_i 2 |x_i - t n_i|``.  Its best interior
lattice point has ``ca = 1/gap(n) - 1``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .asymmetry import ca_from_norm, ca_symmetric
from .errors import BudgetExceeded, DomainError, InstanceTooLarge
from .exactmath import dist_to_nearest_int, max_box, sub, vec
from .numtheory import euler_phi
from .zonotope import LatticeZonotope

DEFAULT_SWEEP_BUDGET = 10**6


class VelocityVector(tuple):
    """Distinct positive integers with gcd 1, stored in increasing order."""

    def __new__(cls, entries: Iterable[int]):
        values = sorted(int(x) for x in entries)
        if len(values) < 2:
            raise DomainError("a velocity vector needs at least two entries")
        if values[0] <= 0:
            raise DomainError(f"velocities must be positive: {values}")
        if len(set(values)) != len(values):
            raise DomainError(f"velocities must be distinct: {values}")
        if math.gcd(*values) != 1:
            raise DomainError(f"velocities must be coprime: {values}")
        return super().__new__(cls, values)

    @property
    def dim(self) -> int:
        return len(self)

    @property
    def center(self) -> tuple:
        return tuple(Fraction(1 + n, 2) for n in self)


def canonical_instance(d: int) -> VelocityVector:
    return VelocityVector(range(1, d + 1))


def _unit_vectors(d: int) -> list[tuple]:
    return [tuple(int(i == j) for i in range(d)) for j in range(d)]


def lonely_runner_zonotope(n: Sequence[int]) -> LatticeZonotope:
    """``Z_n = Zon(e_1, ..., e_d, n)``."""
    n = VelocityVector(n)
    return LatticeZonotope(_unit_vectors(n.dim) + [tuple(n)])


def t_zonotope(n: Sequence[int]) -> LatticeZonotope:
    """``T_n = Zon(e_1, ..., e_d, 3n)``."""
    n = VelocityVector(n)
    return LatticeZonotope(_unit_vectors(n.dim) + [tuple(3 * x for x in n)])


# -- gap of loneliness --------------------------------------------------------


def loneliness(n: Sequence[int], beta) -> Fraction:
    return min(dist_to_nearest_int(beta * x) for x in n)


def gap_with_witness(n: Sequence[int]) -> tuple[Fraction, Fraction]:
    """``(gap(n), beta)``; the maximum is attained at some ``a / (n_i + n_j)``,
    and ``beta`` is the smallest such candidate attaining it."""
    n = VelocityVector(n)
    candidates = set()
    for i, j in combinations(range(n.dim), 2):
        s = n[i] + n[j]
        candidates.update(Fraction(a, s) for a in range(1, s))
    best, best_beta = Fraction(-1), None
    for beta in sorted(candidates):
        value = loneliness(n, beta)
        if value > best:
            best, best_beta = value, beta
    return best, best_beta


def gap(n: Sequence[int]) -> Fraction:
    return gap_with_witness(n)[0]


def lrc_holds(n: Sequence[int]) -> tuple[bool, Fraction]:
    """Does ``gap(n) >= 1/(d+1)`` hold?  Returns the verdict and the best ``beta``."""
    n = VelocityVector(n)
    g, beta = gap_with_witness(n)
    return g >= Fraction(1, n.dim + 1), beta


# -- the zonohedron -----------------------------------------------------------


@dataclass(frozen=True)
class Zonohedron:
    velocity: VelocityVector

    def __post_init__(self):
        object.__setattr__(self, "velocity", VelocityVector(self.velocity))

    @property
    def center(self) -> tuple:
        return self.velocity.center


def _as_zonohedron(Zn) -> Zonohedron:
    return Zn if isinstance(Zn, Zonohedron) else Zonohedron(VelocityVector(Zn))


def zonohedron_norm(Zn, x: Sequence) -> Fraction:
    """``min_t max_i 2 |x_i - t n_i|``, minimized over the kinks of the
    piecewise-linear objective."""
    n = _as_zonohedron(Zn).velocity
    x = vec(x)
    ts = {x[i] / n[i] for i in range(len(n))}
    for i, j in combinations(range(len(n)), 2):
        ts.add((x[i] - x[j]) / (n[i] - n[j]))
        ts.add((x[i] + x[j]) / (n[i] + n[j]))
    return min(2 * max(abs(xi - t * ni) for xi, ni in zip(x, n)) for t in ts)


def interior_representatives(Zn, limit: int | None = None, method: str = "strip") -> list[tuple]:
    """Interior lattice points of ``Z(n)`` up to translation by ``n``.

    Representatives are the points ``t n + y`` with ``t`` in ``[0, 1)`` and
    ``y`` in ``(0,1)^d``.  ``method="strip"`` reads them off the open
    intervals between consecutive breakpoints ``k / n_i``, where the point
    is ``(floor(t n_i) + 1)_i``; ``method="box"`` scans the bounding box of
    ``[0, n] + [0, 1]^d`` and filters by the gauge.  Sorted lexicographically.
    """
    Zn = _as_zonohedron(Zn)
    n = Zn.velocity
    if method == "strip":
        budget = sum(n)
        if limit is not None and budget > limit:
            raise InstanceTooLarge(f"{budget} breakpoints exceed limit {limit}")
        cuts = sorted({Fraction(k, ni) for ni in n for k in range(ni + 1)})
        reps = set()
        for a, b in zip(cuts, cuts[1:]):
            t = (a + b) / 2
            reps.add(tuple(math.floor(t * ni) + 1 for ni in n))
        return sorted(reps)
    if method != "box":
        raise ValueError(f"unknown method {method!r}")
    limit = max_box() if limit is None else limit
    size = math.prod(ni + 2 for ni in n)
    if size > limit:
        raise InstanceTooLarge(f"bounding box has {size} lattice points (limit {limit})")
    c = Zn.center
    reps = {}
    for w in product(*(range(ni + 2) for ni in n)):
        if zonohedron_norm(Zn, sub(w, c)) < 1:
            # key: translate so that the first coordinate lies in [1, n_1]
            k = (w[0] - 1) // n[0]
            key = tuple(wi - k * ni for wi, ni in zip(w, n))
            reps.setdefault(key, w)
    return sorted(reps.values())


def zonohedron_ca(Zn, w: Sequence) -> Fraction:
    Zn = _as_zonohedron(Zn)
    return ca_from_norm(zonohedron_norm(Zn, sub(vec(w), Zn.center)))


def min_ca_zonohedron(Zn, limit: int | None = None) -> Fraction:
    """Smallest ca over interior lattice points; equals ``1/gap(n) - 1``."""
    Zn = _as_zonohedron(Zn)
    return min(zonohedron_ca(Zn, w) for w in interior_representatives(Zn, limit=limit))


# -- closed-form counts for Z_n -----------------------------------------------


def _divisor_classes(n: Sequence[int]) -> dict[int, int]:
    """``ell -> #J_ell`` for every ``ell`` dividing some entry."""
    out = {}
    for ell in range(1, max(n) + 1):
        k = sum(1 for x in n if x % ell == 0)
        if k:
            out[ell] = k
    return out


def count_Zn(n: Sequence[int], mode: str = "interior") -> int:
    n = VelocityVector(n)
    if mode == "volume":
        return 1 + sum(n)
    classes = _divisor_classes(n)
    if mode == "interior":
        return sum(euler_phi(ell) for ell in classes)
    if mode == "closed":
        return 2**n.dim + sum(euler_phi(ell) * (2**k - 1) for ell, k in classes.items())
    raise ValueError(f"unknown mode {mode!r}")


def ca_of_all_one(d: int) -> Fraction:
    """ca of the all-ones point in ``Z_(1, 2, ..., d)``; equals ``d``."""
    Z = lonely_runner_zonotope(canonical_instance(d))
    return ca_symmetric(Z.body, Z.center, (1,) * d).ca


# -- bounded sweep ------------------------------------------------------------


@dataclass
class SweepReport:
    d: int
    max_speed: int
    visited: int = 0
    min_gap: Fraction | None = None
    argmin: tuple | None = None
    tight: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    def merge(self, other: "SweepReport") -> None:
        self.visited += other.visited
        if other.min_gap is not None and (
            self.min_gap is None
            or other.min_gap < self.min_gap
            or (other.min_gap == self.min_gap and other.argmin < self.argmin)
        ):
            self.min_gap, self.argmin = other.min_gap, other.argmin
        self.tight = sorted(self.tight + other.tight)
        self.violations = sorted(self.violations + other.violations)


def _sweep_shard(d: int, B: int, first: int) -> SweepReport:
    report = SweepReport(d, B)
    threshold = Fraction(1, d + 1)
    for rest in combinations(range(first + 1, B + 1), d - 1):
        n = (first,) + rest
        if math.gcd(*n) != 1:
            continue
        g = gap(n)
        report.visited += 1
        if report.min_gap is None or g < report.min_gap:
            report.min_gap, report.argmin = g, n
        if g == threshold:
            report.tight.append(n)
        elif g < threshold:
            report.violations.append((n, g))
    return report


def sweep(d: int, max_speed: int, budget: int = DEFAULT_SWEEP_BUDGET, jobs: int = 1) -> SweepReport:
    """Check the conjecture on every velocity vector with entries ``<= max_speed``."""
    if d < 2:
        raise DomainError(f"sweep needs d >= 2, got {d}")
    if max_speed < d:
        raise DomainError(f"no {d} distinct speeds fit below {max_speed}")
    candidates = math.comb(max_speed, d)
    if candidates > budget:
        raise BudgetExceeded(f"{candidates} candidate vectors exceed budget {budget}")
    firsts = range(1, max_speed - d + 2)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            shards = list(pool.map(_sweep_shard, [d] * len(firsts), [max_speed] * len(firsts), firsts))
    else:
        shards = [_sweep_shard(d, max_speed, f) for f in firsts]
    report = SweepReport(d, max_speed)
    for shard in shards:
        report.merge(shard)
    return report
