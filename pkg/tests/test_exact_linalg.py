from fractions import Fraction

import flint
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ternlat import exact_linalg as xl

small = st.integers(-6, 6)


def int_matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@st.composite
def square(draw, lo=1, hi=5):
    n = draw(st.integers(lo, hi))
    return draw(int_matrices(n, n))


@st.composite
def unimodular(draw, n):
    u = xl.identity(n)
    for _ in range(draw(st.integers(0, 3 * n))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        if i != j:
            c = draw(st.integers(-3, 3))
            u[i] = [a + c * b for a, b in zip(u[i], u[j])]
    return u


def test_hnf_doc_example():
    assert xl.hnf([[2, 0], [0, 2], [1, 1]]) == [[1, 1], [0, 2]]


def test_hnf_det_of_small_example():
    h = xl.hnf([[3, 0], [1, 3]])
    assert h == [[1, 3], [0, 9]]
    assert xl.det_exact(h) == 9


@given(square())
def test_det_matches_flint(m):
    assert xl.det_exact(m) == Fraction(int(flint.fmpz_mat(m).det()))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(int_matrices(n, n), unimodular(n))))
def test_hnf_is_invariant_under_unimodular_rebasing(mu):
    m, u = mu
    assert xl.hnf(xl.matmul(u, m)) == xl.hnf(m)


@given(square())
def test_hnf_shape(m):
    h = xl.hnf(m)
    assert len(h) == xl.rank_q(m)
    pivots = [next(j for j, x in enumerate(r) if x) for r in h]
    assert pivots == sorted(set(pivots))
    for i, (r, p) in enumerate(zip(h, pivots)):
        assert r[p] > 0
        for above in h[:i]:
            assert 0 <= above[p] < r[p]


@given(square())
def test_hnf_preserves_abs_det_of_full_rank(m):
    d = xl.det_exact(m)
    if d:
        assert xl.det_exact(xl.hnf(m)) == abs(d)


@given(square())
def test_inverse(m):
    if xl.det_exact(m) == 0:
        return
    inv = xl.inverse(m)
    assert xl.matmul(m, inv) == xl.rat_matrix(xl.identity(len(m)))


def test_ldl_rejects_indefinite():
    with pytest.raises(xl.NotPositiveDefinite):
        xl.ldl([[1, 2], [2, 1]])


def test_ldl_reconstructs():
    g = [[4, 2, 0], [2, 5, 1], [0, 1, 3]]
    L, D = xl.ldl(g)
    n = 3
    back = [[sum(L[i][k] * D[k] * L[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
    assert back == xl.rat_matrix(g)


@given(int_matrices(3, 5), st.sampled_from([2, 3]))
def test_nullspace_mod_p(m, p):
    ns = xl.nullspace_mod_p(m, p, 5)
    _, r = xl.rref_mod_p(m, p)
    assert len(ns) == 5 - r
    for v in ns:
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) % p == 0


def test_solve_mod_p():
    a = [[1, 1], [0, 1]]
    x = xl.solve_mod_p(a, [2, 1], 3)
    assert [sum(r[j] * x[j] for j in range(2)) % 3 for r in a] == [2, 1]
    assert xl.solve_mod_p([[1, 1], [1, 1]], [0, 1], 3) is None


def test_solve_rational():
    assert xl.solve_rational([[2, 0], [0, 4]], [1, 1]) == [Fraction(1, 2), Fraction(1, 4)]


def test_integer_kernel():
    k = xl.integer_kernel([[1, 1, 1]])
    assert len(k) == 2
    assert all(sum(v) == 0 for v in k)


def test_gcd_list():
    assert xl.gcd_list([6, 9, 15]) == 3


def test_hnf_three_by_three():
    h = xl.hnf([[3, 3, 0], [0, 3, 3], [1, 1, 1]])
    assert h == [[1, 1, 1], [0, 3, 0], [0, 0, 3]]
    assert xl.det_exact(h) == 9
