from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracle import box_vectors, random_gram
from ternlat import exact_linalg as xl
from ternlat.construction import d_lattice
from ternlat.enumeration import (
    Enumerator,
    coset_min_norm,
    kissing_number,
    lll_reduce,
    min_norm,
    probe_short_vector,
    realize_gram,
    second_layer,
    short_vectors,
    theta_prefix,
)
from ternlat.lattice import gram, integer_lattice


@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 5))
def test_short_vectors_match_box(seed, n):
    rng = np.random.default_rng(seed)
    g = random_gram(rng, n)
    bound = max(g[i][i] for i in range(n)) + int(rng.integers(0, 4))
    got = {tuple(c): nrm for c, nrm in short_vectors(g, bound)}
    assert got == box_vectors(g, bound)


@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4))
def test_rational_gram(seed, n):
    rng = np.random.default_rng(seed)
    g = [[Fraction(x, 6) for x in r] for r in random_gram(rng, n)]
    bound = max(g[i][i] for i in range(n))
    e = Enumerator(g)
    assert {tuple(c): nrm for c, nrm in e.vectors(bound)} == box_vectors(g, bound)
    h = e.histogram(bound)
    assert sum(h.values()) == 2 * len(box_vectors(g, bound))


def test_histogram_equals_vectors():
    g = gram(d_lattice(6))
    e = Enumerator(g)
    h = e.histogram(6)
    counts = {}
    for _, nrm in e.vectors(6):
        counts[nrm] = counts.get(nrm, 0) + 2
    assert h == counts


def test_zn_theta():
    # r_n(k) for n = 4: 8, 24, 32, 24
    g = gram(integer_lattice(4))
    assert theta_prefix(g, 4) == [(1, 8), (2, 24), (3, 32), (4, 24)]


def test_dn_kissing():
    for n in (4, 5, 8):
        assert kissing_number(gram(d_lattice(n))) == (2, 2 * n * (n - 1))


def test_second_layer_d4():
    assert second_layer(gram(d_lattice(4))) == (4, 24)


def test_lll_transform_is_unimodular():
    rng = np.random.default_rng(3)
    g = random_gram(rng, 6, spread=6)
    red, t = lll_reduce(g)
    assert abs(xl.det_exact(t)) == 1
    assert red == xl.matmul(xl.matmul(t, xl.rat_matrix(g)), xl.transpose(t))


def test_min_norm_independent_of_basis():
    rng = np.random.default_rng(11)
    g = random_gram(rng, 5)
    u = [[1, 2, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, -3, 0], [0, 0, 0, 1, 0], [1, 0, 0, 0, 1]]
    assert min_norm(g) == min_norm(xl.matmul(xl.matmul(u, g), xl.transpose(u)))


def test_coset_min():
    g = gram(integer_lattice(3))
    assert coset_min_norm(g, [Fraction(1, 2)] * 3) == Fraction(3, 4)


def test_probe_finds_obvious_short_vector():
    g = [[100, 99], [99, 100]]
    hit = probe_short_vector(g, 10)
    assert hit is not None and hit[0] == 2
    assert probe_short_vector(gram(integer_lattice(4)), 1) is None


def test_realize_gram_d4():
    g = gram(d_lattice(4))
    cartan = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
    rows = realize_gram(g, cartan)
    assert rows is not None
    assert xl.matmul(xl.matmul(rows, g), xl.transpose(rows)) == xl.rat_matrix(cartan)
    # A4 has no embedding in D4
    a4 = [[2, 1, 1, 1], [1, 2, 1, 1], [1, 1, 2, 1], [1, 1, 1, 2]]
    assert realize_gram(g, a4) is None
    assert realize_gram(g, [[2, 0], [0, 3]]) is None


def test_bad_input():
    with pytest.raises(ValueError):
        Enumerator([[1, 2], [3, 1]])
    with pytest.raises(ValueError):
        list(short_vectors([[1]], 0))


def test_lll_small_examples():
    assert lll_reduce([[1, 0], [0, 1]])[0] == [[1, 0], [0, 1]]
    red, _ = lll_reduce([[5, 4], [4, 5]])
    assert xl.det_exact(red) == 9
    assert min(red[0][0], red[1][1]) == 2


def test_lll_on_leech_basis():
    from ternlat import catalog

    red, _ = lll_reduce(gram(catalog.build("t24").lattice))
    assert red[0][0] == 36
