from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ternlat import codes as cd
from strategies import nonsingular
from ternlat.construction import (
    ConstructionError,
    check_3z_condition,
    construction_a_binary,
    d_lattice,
    glue,
    kappa_expected_det,
    kissing_formula_11,
    lift_codeword,
    rows3,
    ternary_construction,
    ternary_volume_identity,
    triple,
)
from ternlat.lattice import contains, det_gram, make_lattice


@st.composite
def base_and_code(draw):
    n = draw(st.integers(1, 4))
    rows = draw(nonsingular(n, diag=st.sampled_from([1, -1, 2, -2, 4, 5])))
    k = draw(st.integers(0, n))
    words = draw(st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n), min_size=k, max_size=k))
    words = [w for w in words if any(w)]
    c = cd.code_from_generator(3, words) if words else cd.zero_code(3, n)
    return make_lattice(rows), c


@given(base_and_code())
def test_volume_identity(lc):
    l, c = lc
    t = ternary_construction(l, c)
    assert t.rank == 2 * l.rank
    assert ternary_volume_identity(l, c, t)
    assert det_gram(t) == det_gram(l) ** 2 * Fraction(3) ** (5 * l.rank - 2 * c.k)


@given(base_and_code(), st.data())
def test_lift_independence(lc, data):
    l, c = lc
    t = ternary_construction(l, c)
    rows = [[3 * a for a in r] for r in triple(l).basis]
    for g in c.generator:
        v = lift_codeword(l, g)
        shift = data.draw(st.lists(st.integers(-2, 2), min_size=l.rank, max_size=l.rank))
        w = [a + 3 * sum(s * b[j] for s, b in zip(shift, l.basis)) for j, a in enumerate(v)]
        rows.append(rows3(w, w, [-2 * a for a in w]))
    assert make_lattice(rows, t.colweights).basis == t.basis


@given(base_and_code())
def test_lifts_are_congruent(lc):
    l, c = lc
    for g in c.generator:
        v = lift_codeword(l, g)
        assert contains(l, v)
        assert [int(a) % 3 for a in v] == list(g)


def test_3z_condition_fails_for_3_divisible_det():
    l = make_lattice([[3, 0], [0, 1]])
    assert not check_3z_condition(l)
    with pytest.raises(ConstructionError):
        ternary_construction(l, cd.zero_code(3, 2))


def test_code_length_mismatch():
    with pytest.raises(ConstructionError):
        ternary_construction(d_lattice(4), cd.zero_code(3, 3))


def test_glue_index_and_closure():
    z2 = make_lattice([[2, 0], [0, 2]])
    g = glue(z2, [[1, 1]], closed_set=True)
    assert det_gram(g) == 4
    with pytest.raises(ConstructionError):
        glue(z2, [[1, 0]], closed_set=True, expected_index=3)
    with pytest.raises(ConstructionError):
        glue(z2, [[1, 0], [0, 1]], closed_set=True)


def test_glue_extend():
    z2 = make_lattice([[1, 0, 0], [0, 1, 0]])
    assert glue(z2, [[0, 0, 1]], extend=1).rank == 3
    with pytest.raises(ConstructionError):
        glue(z2, [[1, 1, 0]], extend=1)


def test_construction_a():
    h = cd.code_from_generator(2, [[1, 1, 1, 1, 0, 0, 0], [0, 0, 1, 1, 1, 1, 0], [0, 1, 0, 1, 0, 1, 1],
                                   [1, 1, 1, 1, 1, 1, 1]])
    l = construction_a_binary(h)
    assert det_gram(l) == 4 ** (7 - h.k)


def test_kappa_helpers():
    assert kissing_formula_11(6, 2) == 15 * 18 + 486
    assert kappa_expected_det(6, 1) == 3 ** 18
    with pytest.raises(ValueError):
        kissing_formula_11(1, 0)
