import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ternlat import catalog
from ternlat import codes as cd


@pytest.fixture(scope="module")
def golay():
    return catalog.ternary_golay_12()


def test_ternary_golay(golay):
    wd = cd.weight_distribution(golay)
    assert {w: a for w, a in enumerate(wd) if a} == {0: 1, 6: 264, 9: 440, 12: 24}
    assert cd.is_self_dual(golay)


def test_tetracode():
    t = catalog.load_code("tetracode")
    assert (t.n, t.k, cd.min_distance(t)) == (4, 2, 3)
    assert cd.is_self_dual(t)


def test_binary_golay():
    b = catalog.load_code("golay24_binary")
    wd = cd.weight_distribution(b)
    assert {w: a for w, a in enumerate(wd) if a} == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


@pytest.mark.parametrize("length,k", [(10, 4), (11, 5)])
def test_shortened_golay(length, k):
    c = catalog.shortened_golay(length)
    assert (c.n, c.k, cd.min_distance(c)) == (length, k, 6)


@pytest.mark.parametrize("name,n,k,d", [
    ("c8_2_6", 8, 2, 6), ("c9_3_6", 9, 3, 6), ("c6_martinet", 6, 1, 6), ("c6_kappa10", 6, 1, 6),
    ("c12_5_6", 12, 5, 6), ("c16_8_6", 16, 8, 6), ("bin10_5_4", 10, 5, 4), ("bin16_8_4", 16, 8, 4),
])
def test_bundled_parameters(name, n, k, d):
    c = catalog.load_code(name)
    assert (c.n, c.k, cd.min_distance(c)) == (n, k, d)


def test_missing_code():
    with pytest.raises(catalog.MissingCodeData):
        catalog.load_code("no_such_code")


def test_external_self_dual_20():
    c = cd.read_code(catalog.data_dir() / "external" / "sd20_6.txt")
    assert cd.is_self_dual(c)
    wd = cd.weight_distribution(c)
    assert [wd[w] for w in (3, 6, 9, 12, 15, 18)] == [0, 120, 4360, 26280, 25728, 2560]


@st.composite
def ternary_codes(draw, max_n=7, max_k=3):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, max_k))
    rows = draw(st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n), min_size=k, max_size=k))
    if not any(any(r) for r in rows):
        rows[0][0] = 1
    return cd.code_from_generator(3, rows)


@given(ternary_codes())
def test_dual_dimension_and_orthogonality(c):
    d = cd.dual_code(c)
    assert c.k + d.k == c.n
    for r in c.generator:
        for s in d.generator:
            assert sum(a * b for a, b in zip(r, s)) % 3 == 0


@given(ternary_codes())
def test_double_dual(c):
    assert cd.dual_code(cd.dual_code(c)).same_span(c)


@given(ternary_codes())
def test_weight_distribution_sums(c):
    assert sum(cd.weight_distribution(c)) == 3 ** c.k


@given(ternary_codes(), st.data())
def test_permute_roundtrip(c, data):
    perm = data.draw(st.permutations(range(c.n)))
    inv = [0] * c.n
    for j, q in enumerate(perm):
        inv[q] = j
    assert cd.permute(cd.permute(c, perm), inv).same_span(c)
    assert cd.weight_distribution(cd.permute(c, perm)) == cd.weight_distribution(c)


@given(ternary_codes())
def test_shorten_words_vanish(c):
    s = cd.shorten(c, [0])
    words = {tuple(w) for w in c.codewords().tolist() if w[0] == 0}
    assert {(0,) + tuple(w) for w in s.codewords().tolist()} == words


@given(ternary_codes())
def test_file_roundtrip(tmp_path_factory, c):
    p = tmp_path_factory.mktemp("codes") / "c.txt"
    cd.write_code(c, p, comment="round trip")
    assert cd.read_code(p).same_span(c)


def test_zero_code_rejected():
    with pytest.raises(cd.ZeroCodeError):
        cd.code_from_generator(3, [[0, 0, 0]])


def test_support_conditions_on_shipped_arrangement():
    arr = json.loads((catalog.data_dir() / "t48_arrangement.json").read_text())
    g = catalog.ternary_golay_12()
    tern = cd.direct_sum(g, g)
    binary = cd.permute(catalog.load_code("golay24_binary"), arr["arrangement"])
    out = cd.support_conditions_48(tern, binary, exempt=[tuple(range(12)), tuple(range(12, 24))], limit=10 ** 6)
    assert {c for c, _, _ in out} == {3}
    assert len({t for _, t, _ in out}) == arr["condition_3_violations"]


def test_support_conditions_catch_octad():
    binary = catalog.load_code("golay24_binary")
    octad = next(w for w in binary.codewords().tolist() if sum(w) == 8)
    pos = [i for i, x in enumerate(octad) if x][:6]
    word = [1 if i in pos else 0 for i in range(24)]
    tern = cd.code_from_generator(3, [word])
    out = cd.support_conditions_48(tern, binary)
    assert any(c == 1 for c, _, _ in out)
