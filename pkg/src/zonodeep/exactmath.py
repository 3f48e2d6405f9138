"""Exact rational scalars and small dense linear algebra.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  Vectors are tuples of Fractions or ints, matrices are
tuples of row tuples.  Nothing in here touches floating point.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import RankDeficient, SingularMatrix

Rational = Fraction
RatVector = tuple
RatMatrix = tuple

DEFAULT_MAX_BOX = 10**7


def max_box() -> int:
    """Enumeration guard; ``ZONODEEP_MAX_BOX`` overrides the default."""
    value = os.environ.get("ZONODEEP_MAX_BOX")
    return int(value) if value else DEFAULT_MAX_BOX


def vec(entries: Iterable) -> tuple:
    return tuple(Fraction(x) for x in entries)


def matrix(rows: Iterable[Iterable]) -> tuple:
    rows = tuple(vec(r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def columns_to_matrix(columns: Sequence[Sequence]) -> tuple:
    """Matrix whose columns are the given vectors."""
    return matrix(zip(*columns))


def is_integral(v: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def as_int_vector(v: Sequence) -> tuple:
    if not is_integral(v):
        raise ValueError(f"vector {v} is not integral")
    return tuple(int(x) for x in v)


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale(s, v: Sequence) -> tuple:
    return tuple(s * a for a in v)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v, strict=True)), 0)


def vsum(vectors: Iterable[Sequence], dim: int) -> tuple:
    total = (0,) * dim
    for v in vectors:
        total = add(total, v)
    return total


def mat_vec(V: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(dot(row, x) for row in V)


def frac_part(q) -> Fraction:
    q = Fraction(q)
    return q - math.floor(q)


def dist_to_nearest_int(q) -> Fraction:
    """Distance from ``q`` to the closest integer, in [0, 1/2]."""
    f = frac_part(q)
    return min(f, 1 - f)


def lcm_of_denominators(values: Iterable) -> int:
    return math.lcm(1, *(Fraction(x).denominator for x in values))


def primitive(v: Sequence) -> tuple:
    """Scale a nonzero rational vector to a primitive integer vector.

    The sign is normalized so that the first nonzero entry is positive.
    """
    v = vec(v)
    den = lcm_of_denominators(v)
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with first-nonzero pivoting."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return len(_row_reduce([vec(v) for v in vectors])[1])


def det(M: Sequence[Sequence]):
    """Exact determinant; integer input takes the fraction-free Bareiss path."""
    n = len(M)
    if n == 0:
        return 1
    if all(isinstance(x, int) or Fraction(x).denominator == 1 for row in M for x in row):
        return _bareiss([[int(x) for x in row] for row in M])
    A = [list(vec(row)) for row in M]
    result = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            result = -result
        result *= A[col][col]
        for i in range(col + 1, n):
            f = A[i][col] / A[col][col]
            if f:
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return result


def _bareiss(A: list[list[int]]) -> int:
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def solve_linear(V: Sequence[Sequence], b: Sequence) -> tuple:
    """Solve ``V x = b`` exactly for square nonsingular ``V`` (rows given)."""
    n = len(V)
    if any(len(row) != n for row in V) or len(b) != n:
        raise ValueError("solve_linear needs a square system")
    aug = [list(vec(row)) + [Fraction(bi)] for row, bi in zip(V, b)]
    reduced, pivots = _row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return tuple(reduced[i][n] for i in range(n))


def kernel_normal(vectors: Sequence[Sequence], dim: int) -> tuple:
    """Primitive integer normal to ``dim - 1`` vectors of rank ``dim - 1``."""
    vectors = [vec(v) for v in vectors]
    if len(vectors) != dim - 1 or any(len(v) != dim for v in vectors):
        raise ValueError(f"need {dim - 1} vectors of length {dim}")
    if dim == 1:
        return (1,)
    reduced, pivots = _row_reduce(vectors)
    if len(pivots) < dim - 1:
        raise RankDeficient(f"rank {len(pivots)} < {dim - 1}")
    free = next(j for j in range(dim) if j not in pivots)
    x = [Fraction(0)] * dim
    x[free] = Fraction(1)
    for row, p in zip(reduced, pivots):
        x[p] = -row[free]
    return primitive(x)


def gcd_of_minors(V: Sequence[Sequence], i: int) -> int:
    """gcd of the absolute values of all ``i x i`` minors of an integer matrix.

    The empty minor (``i = 0``) has gcd 1; a matrix with no nonzero
    ``i``-minor gives 0.
    """
    if i == 0:
        return 1
    rows = [[int(x) for x in row] for row in V]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    if i > min(nrows, ncols):
        raise ValueError(f"minor size {i} exceeds matrix shape {nrows}x{ncols}")
    g = 0
    for cs in combinations(range(ncols), i):
        for rs in combinations(range(nrows), i):
            g = math.gcd(g, _bareiss([[rows[r][c] for c in cs] for r in rs]))
            if g == 1:
                return 1
    return g
