from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from zonodeep.errors import RankDeficient, SingularMatrix
from zonodeep.exactmath import (
    columns_to_matrix,
    det,
    dist_to_nearest_int,
    dot,
    gcd_of_minors,
    kernel_normal,
    mat_vec,
    primitive,
    solve_linear,
)


@pytest.mark.parametrize("q, expected", [(5, 0), (F(1, 3), F(1, 3)), (F(7, 2), F(1, 2)), (F(-5, 3), F(1, 3))])
def test_dist_to_nearest_int(q, expected):
    assert dist_to_nearest_int(q) == expected


def test_solve_linear_examples():
    assert solve_linear([[1, 0], [0, 1]], [3, 4]) == (3, 4)
    # columns (4,2) and (0,1)
    assert solve_linear(columns_to_matrix([(4, 2), (0, 1)]), [1, 1]) == (F(1, 4), F(1, 2))
    with pytest.raises(SingularMatrix):
        solve_linear(columns_to_matrix([(1, 1), (2, 2)]), [1, 0])


small = st.integers(-5, 5)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(small, min_size=n, max_size=n))))
def test_solve_then_multiply_back(case):
    V, b = case
    if det(V) == 0:
        with pytest.raises(SingularMatrix):
            solve_linear(V, b)
        return
    x = solve_linear(V, b)
    assert mat_vec(V, x) == tuple(b)
    assert all(isinstance(xi, F) for xi in x)


def test_det_matches_cofactor_expansion():
    def cofactor(M):
        if len(M) == 1:
            return M[0][0]
        return sum((-1) ** j * M[0][j] * cofactor([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))

    M = [[2, -1, 3, 0], [1, 4, -2, 5], [0, 3, 1, -1], [6, 0, 2, 2]]
    assert det(M) == cofactor(M)
    Mq = [[F(1, 2), 3], [F(2, 3), -1]]
    assert det(Mq) == cofactor(Mq)


def test_kernel_normal_examples():
    assert kernel_normal([(1, 0)], 2) == (0, 1)
    assert kernel_normal([(1, 1)], 2) == (1, -1)
    assert kernel_normal([], 1) == (1,)
    with pytest.raises(RankDeficient):
        kernel_normal([(1, 1, 1), (2, 2, 2)], 3)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=3, max_size=3))
def test_kernel_normal_orthogonal_and_primitive(vectors):
    try:
        u = kernel_normal(vectors, 4)
    except RankDeficient:
        return
    import math

    assert all(dot(u, v) == 0 for v in vectors)
    assert math.gcd(*u) == 1
    assert next(x for x in u if x) > 0


def test_primitive():
    assert primitive((F(1, 2), F(-3, 4))) == (2, -3)
    assert primitive((0, -4, 6)) == (0, 2, -3)


def test_gcd_of_minors_examples():
    assert gcd_of_minors(columns_to_matrix([(2, 4)]), 1) == 2
    assert gcd_of_minors(columns_to_matrix([(1, 0), (1, 2)]), 2) == 2
    assert gcd_of_minors([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3) == 1
    assert gcd_of_minors([[1, 2]], 0) == 1
    assert gcd_of_minors(columns_to_matrix([(1, 1), (2, 2)]), 2) == 0
