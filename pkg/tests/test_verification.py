import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import nonsingular
from ternlat import catalog, verification as vf
from ternlat import exact_linalg as xl
from ternlat.construction import d_lattice
from ternlat.lattice import make_lattice


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(nonsingular(n), nonsingular(n, diag=st.just(1)))))
def test_fingerprint_ignores_basis(mu):
    m, u = mu
    a = make_lattice(m, rebase=False)
    b = make_lattice(xl.matmul(u, m), rebase=False)
    fa, fb = vf.fingerprint(a, 1, max_norm=6), vf.fingerprint(b, 1, max_norm=6)
    assert fa == fb
    assert vf.compare_fingerprints(fa, fb) == "inconclusive"


def test_fingerprint_separates():
    a = vf.fingerprint(d_lattice(4), 1, 4)
    b = vf.fingerprint(make_lattice([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]]), 1, 4)
    assert vf.compare_fingerprints(a, b) == "different"


def test_k10_pair_differs():
    a = vf.fingerprint(catalog.build("k10").lattice, Fraction(1, 9), 4)
    b = vf.fingerprint(catalog.build("k10_martinet").lattice, Fraction(1, 9), 4)
    assert vf.compare_fingerprints(a, b) == "different"


def test_verify_e8_deep():
    rep = vf.verify("e8", "deep")
    status = {c.claim: c.status for c in rep.claims}
    assert status["kissing"] == status["theta"] == status["unimodular_at"] == vf.PASS
    assert not rep.failed


def test_depth_gates_claims():
    rep = vf.verify("e8", "structural")
    status = {c.claim: c.status for c in rep.claims}
    assert status["det_gram"] == vf.PASS
    assert status["kissing"] == vf.SKIPPED
    assert status["min_norm"] == vf.SKIPPED


def test_claim_subset():
    rep = vf.verify("t10", "deep", claims=["kissing"])
    assert [c.claim for c in rep.claims] == ["kissing"]


def test_second_layer_extended():
    rep = vf.verify("t10", "extended", claims=["second_layer"])
    assert rep.claims[0].status == vf.PASS
    assert rep.claims[0].computed == (Fraction(54), 768)


def test_failed_claim_sets_exit_code():
    rep = vf.verify("s12", "deep", claims=["kissing"])
    assert rep.claims[0].status == vf.FAIL
    assert vf.exit_code([rep]) == 1


def test_missing_code_skips():
    rep = vf.verify("t40", "deep")
    assert rep.claims and all(c.status == vf.SKIPPED for c in rep.claims)
    assert vf.exit_code([rep]) == 0


def test_timeout_skips():
    rep = vf.verify("t24", "deep", claims=["kissing"], timeout=0.01)
    assert rep.claims[0].status == vf.SKIPPED
    assert "timed out" in rep.claims[0].note


def test_unknown_entry():
    with pytest.raises(catalog.CatalogError):
        vf.verify("nosuch")
    with pytest.raises(ValueError):
        vf.verify("e8", "bogus")


def test_default_depth():
    assert [vf.default_depth(r) for r in (8, 26, 27, 32, 40)] == ["deep", "deep", "shallow", "shallow",
                                                                   "structural"]


def test_reports_serialise():
    reps = vf.run_all("structural", "dim=8")
    data = json.loads(vf.reports_json(reps))
    assert data[0]["entry"] == "e8"
    assert "e8" in vf.reports_table(reps)


def test_run_all_parallel_matches_serial():
    def key(reps):
        return [[(c.claim, c.status, c.computed) for c in r.claims] for r in reps]

    assert key(vf.run_all("shallow", "k1", workers=1)) == key(vf.run_all("shallow", "k1", workers=2))


@pytest.mark.extended
def test_extended_run_has_no_build_errors():
    files = {"t40": str(catalog.data_dir() / "external" / "sd20_6.txt")}
    reps = vf.run_all("extended", code_files=files)
    assert not any(r.build_error for r in reps)
    assert all(c.status != vf.SKIPPED for r in reps for c in r.claims)
