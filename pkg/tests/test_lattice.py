from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import nonsingular
from ternlat.lattice import (
    WeightedLattice,
    center_density_squared,
    contains,
    det_gram,
    dumps,
    equate_coordinates,
    gram,
    index_in,
    integer_lattice,
    is_even_integral,
    is_unimodular,
    lattice_from_dict,
    lattice_to_dict,
    loads,
    make_lattice,
    orthogonal_section,
    scaled_lattice,
    solution_lattice,
)



@st.composite
def lattices(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    den = draw(st.sampled_from([1, 2, 3]))
    rows = [[Fraction(x, den) for x in r] for r in draw(nonsingular(n))]
    w = draw(st.lists(st.sampled_from([Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2)]),
                      min_size=n, max_size=n))
    return make_lattice(rows, w, name="r")


def test_e8_like_checks():
    # D4 scaled: Gram of D4 has det 4
    d4 = solution_lattice(4, congruences=[([[1, 1, 1, 1]], 2)])
    assert det_gram(d4) == 4
    assert is_even_integral(d4) == (True, True)
    assert not is_unimodular(d4)
    assert center_density_squared(d4, 2) == Fraction(1, 64)


def test_colweights_enter_the_gram():
    l = make_lattice([[1, 0], [0, 1]], [1, 3])
    assert gram(l) == [[1, 0], [0, 3]]


def test_integer_lattice_unimodular():
    assert is_unimodular(integer_lattice(5))
    assert is_even_integral(integer_lattice(3)) == (True, False)


@given(lattices())
def test_json_roundtrip(l):
    assert loads(dumps(l)) == l
    assert lattice_from_dict(lattice_to_dict(l)).basis == l.basis


def test_json_rejects_inconsistent_rank():
    d = lattice_to_dict(integer_lattice(2))
    d["rank"] = 3
    with pytest.raises(ValueError):
        lattice_from_dict(d)


@given(lattices())
def test_scaling_det(l):
    assert det_gram(scaled_lattice(l, 2)) == det_gram(l) * 4 ** l.rank


@given(lattices())
def test_basis_vectors_contained(l):
    for b in l.basis:
        assert contains(l, b)
    assert not contains(l, [x / 7 for x in l.basis[0]]) or l.rank == 0


@given(lattices(), st.integers(2, 3))
def test_index_of_multiple(l, m):
    assert index_in(scaled_lattice(l, m), l) == m ** l.rank


def test_equate_and_section():
    z3 = integer_lattice(3)
    e = equate_coordinates(z3, 0, 1)
    assert e.rank == 2
    assert all(v[0] == v[1] for v in e.basis)
    s = orthogonal_section(z3, [1, 1, 1])
    assert s.rank == 2
    assert det_gram(s) == 3


def test_weighted_lattice_validation():
    with pytest.raises(ValueError):
        WeightedLattice(((Fraction(1),),), (Fraction(0),))
    with pytest.raises(ValueError):
        make_lattice([[1, 2], [2, 4]], rebase=False)
