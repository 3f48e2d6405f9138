import math
import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from zonodeep.errors import BudgetExceeded, DomainError, InstanceTooLarge
from zonodeep.exactmath import add, columns_to_matrix, det, sub
from zonodeep.lonelyrunner import (
    VelocityVector,
    Zonohedron,
    ca_of_all_one,
    canonical_instance,
    count_Zn,
    gap,
    gap_with_witness,
    interior_representatives,
    lonely_runner_zonotope,
    lrc_holds,
    min_ca_zonohedron,
    sweep,
    t_zonotope,
    zonohedron_ca,
    zonohedron_norm,
)
from zonodeep.zonotope import interior_lattice_points, lattice_points


def feasible(n, gamma):
    """Is there beta in [0, 1] with every ||beta n_i|| >= gamma?  Exact interval intersection."""
    allowed = [(F(0), F(1))]
    for ni in n:
        pieces = [(F(k) + gamma) / ni for k in range(ni)], [(F(k + 1) - gamma) / ni for k in range(ni)]
        mine = [(a, b) for a, b in zip(*pieces) if a <= b]
        allowed = [(max(a, c), min(b, e)) for a, b in allowed for c, e in mine if max(a, c) <= min(b, e)]
    return bool(allowed)


def small_suite(max_d=4, max_entry=9):
    for d in range(2, max_d + 1):
        for n in combinations(range(1, max_entry + 1), d):
            if math.gcd(*n) == 1:
                yield n


def test_velocity_vector_validation():
    assert VelocityVector([3, 1, 2]) == (1, 2, 3)
    for bad in ([1], [0, 1], [1, 1, 2], [2, 4]):
        with pytest.raises(DomainError):
            VelocityVector(bad)


def test_constructors():
    assert canonical_instance(3) == (1, 2, 3)
    assert lonely_runner_zonotope((1, 2)).generators == ((1, 0), (0, 1), (1, 2))
    assert t_zonotope((1, 2)).generators == ((1, 0), (0, 1), (3, 6))


def test_gap_examples():
    assert gap_with_witness((1, 2)) == (F(1, 3), F(1, 3))
    assert gap((1, 2, 3)) == F(1, 4)
    assert gap((1, 3, 4, 7)) == F(1, 5)
    assert gap((2, 5)) == F(3, 7)


def test_gap_against_interval_oracle():
    for n in small_suite(3, 9):
        g = gap(n)
        assert feasible(n, g)
        assert not feasible(n, g + F(1, 10**6))


def test_lrc_examples():
    assert lrc_holds((1, 2)) == (True, F(1, 3))
    assert lrc_holds((1, 2, 3, 4, 5, 6))[0]
    assert lrc_holds((2, 5))[0]


def test_zonohedron_norm_examples():
    Zn = Zonohedron((1, 2))
    assert zonohedron_norm(Zn, (0, 0)) == 0
    assert zonohedron_norm(Zn, (1, 2)) == 0
    assert zonohedron_norm(Zn, (0, F(-1, 2))) == F(1, 3)
    assert zonohedron_ca(Zn, (1, 1)) == 2


def test_norm_matches_fine_scan():
    """The minimax is attained at a kink, so no grid point can do better."""
    rng = random.Random(4)
    for _ in range(20):
        n = (1, rng.randint(2, 4), rng.randint(5, 9))
        x = tuple(F(rng.randint(-20, 20), rng.randint(1, 6)) for _ in n)
        value = zonohedron_norm(n, x)
        grid = [F(k, 240) for k in range(-2400, 2401)]
        assert value <= min(2 * max(abs(xi - t * ni) for xi, ni in zip(x, n)) for t in grid)


def test_representatives():
    assert len(interior_representatives((1, 2))) == 2
    assert len(interior_representatives((1, 2, 3))) == 4
    assert len(interior_representatives((1, 2, 3, 4, 5))) == 10
    with pytest.raises(InstanceTooLarge):
        interior_representatives((1, 2, 3), limit=2)


def test_strip_agrees_with_box_scan():
    for n in small_suite(3, 7):
        strip = interior_representatives(n)
        box = interior_representatives(n, method="box")
        assert len(strip) == len(box) == count_Zn(n, "interior")
        key = lambda w: tuple(wi - ((w[0] - 1) // n[0]) * ni for wi, ni in zip(w, n))
        assert sorted(map(key, strip)) == sorted(map(key, box))


def test_min_ca_examples():
    assert min_ca_zonohedron((1, 2)) == 2
    assert min_ca_zonohedron((1, 2, 3, 4)) == 4
    assert min_ca_zonohedron((1, 3, 4, 7)) == 4


def test_reformulation_identity_and_equivalence():
    for n in small_suite(4, 9):
        g = gap(n)
        assert min_ca_zonohedron(n) == 1 / g - 1
        reps = interior_representatives(n)
        c = VelocityVector(n).center
        norms = [zonohedron_norm(n, sub(w, c)) for w in reps]
        for gamma in (g, g - F(1, max(n)), g + F(1, 1000)):
            if gamma <= 0:
                continue
            assert feasible(n, gamma) == any(nu <= 1 - 2 * gamma for nu in norms)


def test_periodicity():
    for n in [(1, 2), (1, 2, 3), (2, 3, 7), (1, 3, 4, 7)]:
        for w in interior_representatives(n):
            assert zonohedron_ca(n, w) == zonohedron_ca(n, add(w, n)) == zonohedron_ca(n, sub(w, n))


def test_all_one_point():
    for d in range(2, 9):
        assert ca_of_all_one(d) == d


def test_count_examples():
    assert [count_Zn((1, 2), m) for m in ("volume", "interior", "closed")] == [4, 2, 8]
    assert count_Zn(canonical_instance(5), "interior") == 10
    assert count_Zn((2, 5), "interior") == 6


def shephard_volume(gens):
    d = len(gens[0])
    return sum(abs(det(columns_to_matrix([gens[j] for j in J]))) for J in combinations(range(len(gens)), d))


def test_counts_against_enumeration():
    rng = random.Random(8)
    for _ in range(60):
        d = rng.randint(2, 4)
        n = tuple(sorted(rng.sample(range(1, 13), d)))
        if math.gcd(*n) != 1:
            continue
        Z = lonely_runner_zonotope(n)
        interior = count_Zn(n, "interior")
        assert interior == len(interior_lattice_points(Z))
        assert count_Zn(n, "closed") == len(lattice_points(Z))
        assert count_Zn(n, "volume") == shephard_volume(Z.generators)
        assert max(n) <= interior <= sum(n)


def test_sweep_examples():
    r = sweep(2, 10)
    assert (r.min_gap, r.argmin, r.violations) == (F(1, 3), (1, 2), [])
    r = sweep(3, 8)
    assert r.min_gap == F(1, 4) and (1, 2, 3) in r.tight and not r.violations
    r = sweep(4, 7)
    assert {(1, 2, 3, 4), (1, 3, 4, 7)} <= set(r.tight)
    assert r.visited == sum(1 for n in combinations(range(1, 8), 4) if math.gcd(*n) == 1)


def test_sweep_guards_and_jobs():
    with pytest.raises(BudgetExceeded):
        sweep(3, 30, budget=100)
    with pytest.raises(DomainError):
        sweep(1, 5)
    assert sweep(3, 9, jobs=2) == sweep(3, 9)


def test_canonical_instance_is_the_unique_sparsest_tight_vector():
    tight = sweep(4, 7).tight
    counts = {n: count_Zn(n, "interior") for n in tight}
    smallest = min(counts.values())
    assert [n for n, c in counts.items() if c == smallest] == [(1, 2, 3, 4)]
