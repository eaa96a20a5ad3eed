"""Named lattices: builders, bundled code data and expected invariants.

Every builder returns a :class:`Built` record holding the lattice at
construction scale together with the ternary-construction stages it went
through (so the volume identity can be rechecked) and any side information.
Expected values live in ``data/catalog.json``; each value carries a ``source``
of ``"stated"`` (a claim being reproduced) or ``"derived"`` (computed here by
an independent route and frozen).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from . import codes as cd
from .codes import LinearCode
from .construction import (
    ConstructionError,
    a_lattice,
    add_column,
    build_t48,
    d_lattice,
    glue,
    glue_vector_12,
    glue_vector_23,
    glue_vector_31,
    kappa_family,
    rows3,
    ternary_construction,
)
from .lattice import (
    WeightedLattice,
    equate_coordinates,
    integer_lattice,
    make_lattice,
    orthogonal_section,
    solution_lattice,
)

DATA_DIR = Path(os.environ.get("TERNLAT_DATA", Path(__file__).with_name("data")))
H = Fraction(3, 2)


class CatalogError(KeyError):
    """Unknown entry name."""


class MissingCodeData(FileNotFoundError):
    """A builder needs an external code file that was not supplied."""


@dataclass(frozen=True)
class TernaryStage:
    base: WeightedLattice
    code: LinearCode
    lattice: WeightedLattice


@dataclass
class Built:
    lattice: WeightedLattice
    stages: List[TernaryStage] = field(default_factory=list)
    info: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Claim:
    value: object
    source: str


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    aliases: Tuple[str, ...]
    builder: str
    params: dict
    dim: int
    ref: str
    report_scale: Fraction
    expected: Dict[str, Claim]

    def claim(self, key: str) -> Optional[Claim]:
        return self.expected.get(key)


# ---------------------------------------------------------------------------
# code inventory


def data_dir() -> Path:
    return Path(os.environ.get("TERNLAT_DATA", DATA_DIR))


def load_code(name: str) -> LinearCode:
    path = data_dir() / "codes" / f"{name}.txt"
    if not path.exists():
        raise MissingCodeData(f"code data {path} not found")
    return cd.read_code(path)


def code_inventory() -> List[str]:
    return sorted(p.stem for p in (data_dir() / "codes").glob("*.txt"))


def ternary_golay_12() -> LinearCode:
    return load_code("golay12")


def golay_13() -> LinearCode:
    """The Golay code with a zero column appended."""
    g = ternary_golay_12()
    return cd.code_from_generator(3, [list(r) + [0] for r in g.generator])


def shortened_golay(length: int) -> LinearCode:
    """Shorten the Golay code at its last ``12 - length`` positions."""
    return cd.shorten(ternary_golay_12(), list(range(length, 12)))


def block_code(block: LinearCode, copies: int) -> LinearCode:
    c = block
    for _ in range(copies - 1):
        c = cd.direct_sum(c, block)
    return c


def _signed(word):
    return [((int(a) + 1) % 3) - 1 for a in word]


# ---------------------------------------------------------------------------
# shared pieces

E8_FORMS = [[1, 1, 0, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 1, 0, 0], [0, 0, 0, 1, 1, 0, 0, 0], [0, 0, 0, 0, 0, 0, 1, 1]]
T10_FORMS = [[1, 1, 0, 0, 0, 0, 0, 0], [0, 0, 1, 1, 1, 1, 0, 0], [0, 0, 0, 0, 0, 0, 1, 1]]
W12_FORMS = [[1, 1, 0, 0, 0, 0, -1, -1], [0, 0, 1, -1, -1, 1, 0, 0]]
L9_FORMS = [[1, 1, 1, 0, 0, 0, 0, 0, 0], [0, 0, 0, 1, 1, 1, 0, 0, 0], [0, 0, 0, 0, 0, 0, 1, 1, 1]]
K10_FORMS = [[1, 1, 0, 0, 0, 0, 0, 0], [0, 0, 1, 1, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1, 1, 1]]


def _tc(base: WeightedLattice, code: LinearCode, name: str = "") -> Built:
    t = ternary_construction(base, code, name=name)
    return Built(t, [TernaryStage(base, code, t)])


def _three_translates(built: Built, x, name: str) -> Built:
    """Glue ``(x,-x,0)``, ``(-x,0,x)`` and ``(0,-x,x)`` onto a ``T(C)``."""
    leaders = [glue_vector_12(x), glue_vector_31(x), rows3([0] * len(x), [-a for a in x], x)]
    t = glue(built.lattice, leaders, closed_set=True, name=name)
    return Built(t, built.stages, {"base": built.lattice})


def _from_three_rows(rows) -> List[Fraction]:
    out = []
    for r in rows:
        out.extend(Fraction(a) for a in r)
    return out


# ---------------------------------------------------------------------------
# builders


def b_e8(p) -> Built:
    return _tc(solution_lattice(8, E8_FORMS), load_code("c8_2_6"), "e8")


def b_t10(p) -> Built:
    return _tc(solution_lattice(8, T10_FORMS), load_code("c8_2_6"), "t10")


def b_k9(p) -> Built:
    t = b_t10(p)
    i, j = p.get("columns", (0, 8))
    return Built(equate_coordinates(t.lattice, i, j, "k9"), t.stages)


def b_k10(p) -> Built:
    code = load_code(p.get("code", "c6_kappa10"))
    return _tc(solution_lattice(6, [[1] * 6]), code, p.get("label", "k10"))


def b_lambda11max(p) -> Built:
    t = b_t10(p)
    x = _from_three_rows([[0, 0, -2, 2, 2, -2, 0, 0, 1], [0, 0, 1, -1, -1, 1, 0, 0, -1], [0, 0, 1, -1, -1, 1, 0, 0, 0]])
    l = glue(add_column(t.lattice, 6), [x], extend=1, name="lambda11max")
    return Built(l, t.stages)


def b_k12_codes(p) -> Built:
    return _tc(solution_lattice(9, L9_FORMS), load_code("c9_3_6"), "k12_codes")


def b_k10_stage(p) -> Built:
    return _tc(solution_lattice(8, K10_FORMS), load_code("c8_2_6_k10"), "k10_stage")


def b_k12_glue(p) -> Built:
    k10 = b_k10_stage(p)
    b = add_column(k10.lattice, Fraction(9, 2))
    x = _from_three_rows([[0, 0, -1, -1, 2, 1, 1, -2, 0], [H, -H, -1, 2, -1, 1, -2, 1, 1],
                          [-H, H, 2, -1, -1, -2, 1, 1, -1]])
    y = _from_three_rows([[H, -H, -1, -1, 2, 1, 1, -2, 1], [-H, H, -1, 2, -1, 1, -2, 1, -1],
                          [0, 0, 2, -1, -1, -2, 1, 1, 0]])
    k11 = glue(b, [x], extend=1, name="k11")
    k12 = glue(b, [x, y], extend=2, name="k12_glue")
    return Built(k12, k10.stages, {"k10": k10.lattice, "k11": k11, "X": x, "Y": y})


T16_SUPPORTS = [(1, 2, 5, 6), (2, 3, 7, 8), (3, 4, 6, 8), (1, 3, 5, 6, 7, 8), (1, 2, 3, 4, 5, 8), (2, 4, 6, 7), (1, 4, 5, 7)]


def b_t16(p) -> Built:
    tet = load_code("tetracode")
    st = _tc(integer_lattice(8), block_code(tet, 2), "t16_prime")
    xs = [glue_vector_12([H if j + 1 in s else 0 for j in range(8)]) for s in T16_SUPPORTS]
    y = glue_vector_23([H] * 8)
    leaders = xs + [y] + [[a - b for a, b in zip(y, x)] for x in xs]
    t = glue(st.lattice, leaders, closed_set=True, name="t16")
    return Built(t, st.stages, {"base": st.lattice})


def _dual_min_vector(l: WeightedLattice):
    """A minimal vector of the dual lattice, in ambient coordinates."""
    from . import exact_linalg as xl
    from .enumeration import Enumerator
    from .lattice import gram

    gi = xl.inverse(gram(l))
    e = Enumerator(gi)
    coeffs = min(c for c, _ in e.vectors(e.min_norm()))
    y = [sum((c * gi[i][j] for i, c in enumerate(coeffs)), Fraction(0)) for j in range(l.rank)]
    return l.vector(y)


def b_section(p) -> Built:
    src = build(p["of"])
    v = _dual_min_vector(src.lattice)
    return Built(orthogonal_section(src.lattice, v, p["label"]), src.stages, {"normal": v})


def b_t24_prime(p) -> Built:
    return _tc(d_lattice(12), ternary_golay_12(), "t24_prime")


def b_leech(p) -> Built:
    return _three_translates(b_t24_prime(p), [H] * 7 + [-H] * 5, "t24")


def b_t22(p) -> Built:
    base = solution_lattice(12, [[1, -1] + [0] * 10], [([[0, 0] + [1] * 10], 2)])
    st = _tc(base, load_code("c12_5_6"), "t22_prime")
    return _three_translates(st, [H] * 9 + [-H] * 3, "t22")


def b_t26(p) -> Built:
    st = _tc(d_lattice(13), golay_13(), "t26_prime")
    return _three_translates(st, [H] * 5 + [-H] * 7 + [0], "t26")


def b_w12(p) -> Built:
    return _tc(solution_lattice(8, W12_FORMS), load_code("c8_2_6"), "w12")


def _w12_xy():
    h3 = H / 3
    x = _from_three_rows([[2, 0, h3, h3, -H, -H, 1, 1, 1], [-1, 0, h3, h3, H, H, -2, 1, -1],
                          [-1, 0, -1, -1, 0, 0, 1, -2, 0]])
    y = _from_three_rows([[2, 0, -1, -1, 0, 0, 1, 1, 0], [-1, 0, Fraction(7, 2), Fraction(7, 2), -H, -H, -2, 1, 1],
                          [-1, 0, Fraction(-5, 2), Fraction(-5, 2), H, H, 1, -2, -1]])
    return x, y


def b_lambda13(p) -> Built:
    w = b_w12(p)
    x, _ = _w12_xy()
    return Built(glue(add_column(w.lattice, 3), [x], extend=1, name="lambda13"), w.stages)


def b_t14(p) -> Built:
    w = b_w12(p)
    x, y = _w12_xy()
    return Built(glue(add_column(w.lattice, 3), [x, y], extend=2, name="t14"), w.stages, {"X": x, "Y": y})


S14_SUPPORTS = [(1, 2, 5, 6), (2, 3, 6, 7), (1, 3, 5, 7), (1, 4, 5, 8), (2, 4, 6, 8), (3, 4, 7, 8), tuple(range(1, 9))]


def b_s14(p) -> Built:
    st = _tc(solution_lattice(8, [[0, 0, 0, 1, 0, 0, 0, -1]]), load_code("c8_3_3_s14"), "s14_prime")
    xs = [glue_vector_12([H if j + 1 in s else 0 for j in range(8)]) for s in S14_SUPPORTS]
    y = glue_vector_23([H] * 8)
    leaders = xs + [y] + [[a - b for a, b in zip(y, x)] for x in xs]
    return Built(glue(st.lattice, leaders, closed_set=True, name="s14"), st.stages, {"base": st.lattice})


def b_dual_forms(p) -> Built:
    """``T(C)`` over the sublattice of ``Z^n`` cut out by signed dual codewords."""
    code = named_code(p["code"])
    forms = [_signed(w) for w in p["forms"]]
    for w in p["forms"]:
        if any(sum(int(a) * int(b) for a, b in zip(w, g)) % 3 for g in code.generator):
            raise ConstructionError(f"form {w} is not in the dual code")
    return _tc(solution_lattice(code.n, forms), code, p["label"])


def b_root_a(p) -> Built:
    code = named_code(p["code"])
    return _tc(a_lattice(code.n - 1), code, p["label"])


def b_equate(p) -> Built:
    src = build(p["of"])
    i, j = p["columns"]
    return Built(equate_coordinates(src.lattice, i, j, p["label"]), src.stages)


def b_printed(p) -> Built:
    d = json.loads((data_dir() / "bases" / f"{p['basis']}.json").read_text())
    rows = [[Fraction(x) for x in r] for r in d["rows"]]
    return Built(make_lattice(rows, name=p["basis"], rebase=True))


def b_h10(p) -> Built:
    from .construction import construction_a_binary
    from .lattice import scaled_lattice

    a = construction_a_binary(load_code(p.get("code", "bin10_5_4")), name="h10")
    return Built(scaled_lattice(a, 3).with_name("h10"), [], {"construction_a": a})


def b_l10(p) -> Built:
    n = 18

    def idx(i, j):
        return i * n + j

    eqs = []
    for j in range(n):
        r = [0] * 54
        r[idx(0, j)] = r[idx(1, j)] = r[idx(2, j)] = 1
        eqs.append(r)
    pairs = ((0, 1), (2, 3), (4, 5), (6, 7)) + tuple((8, k) for k in range(9, 18))
    for i in range(3):
        for a, b in pairs:
            r = [0] * 54
            r[idx(i, a)], r[idx(i, b)] = 1, -1
            eqs.append(r)
    parity = cd.dual_code(load_code("tetracode"))
    cong = []
    for hrow in parity.generator:
        r = [0] * 54
        for t, col in zip(hrow, (0, 2, 4, 6)):
            r[idx(0, col)] += int(t)
            r[idx(1, col)] -= int(t)
        cong.append(r)
    lp = solution_lattice(54, eqs, [(cong, 3)], name="l10_prime")
    x = [Fraction(1, 3)] * 36 + [Fraction(-2, 3)] * 18
    l10 = glue(lp, [x, [-a for a in x]], closed_set=True, name="l10_hamming")
    return Built(l10, [], {"base": lp, "X": x})


def b_kappa(p) -> Built:
    code = named_code(p["code"])
    return Built(kappa_family(code.n, code, name=p["label"]), [], {"code": code})


def _xc(word):
    return [H if a else Fraction(0) for a in word]


def b_t32_v1(p) -> Built:
    st = _tc(integer_lattice(16), block_code(load_code("tetracode"), 4), "t32_prime")
    c12 = load_code(p.get("binary_12", "bin16_6_4"))
    c23 = load_code(p.get("binary_23", "bin16_10_4"))
    leaders = [glue_vector_12(_xc(w)) for w in c12.generator] + [glue_vector_23(_xc(w)) for w in c23.generator]
    t = glue(st.lattice, leaders, expected_index=2 ** 16, name=p.get("label", "t32_v1"))
    return Built(t, st.stages, {"base": st.lattice})


def b_t32_d16(p) -> Built:
    st = _tc(d_lattice(16), load_code("c16_8_6"), "t32_prime_d16")
    x = [Fraction(a) for a in p["x"]]
    a, b = glue_vector_12(x), glue_vector_23(x)
    t = glue(st.lattice, [a, b, [u + v for u, v in zip(a, b)]], closed_set=True, name=p["label"])
    return Built(t, st.stages, {"base": st.lattice})


def b_t40(p) -> Built:
    path = p.get("code_file")
    if not path:
        raise MissingCodeData("t40 needs a self-dual [20,10,6] ternary code file (--code-file)")
    path = Path(path)
    if not path.exists():
        raise MissingCodeData(f"code file {path} not found; t40 needs a self-dual [20,10,6] ternary code")
    code = cd.read_code(path)
    if code.p != 3 or code.n != 20 or not cd.is_self_dual(code) or cd.min_distance(code) != 6:
        raise ConstructionError(f"{path} is not a self-dual [20,10,6] ternary code")
    st = _tc(d_lattice(20), code, "w40")
    b = _three_translates(st, [H] * 10 + [-H] * 10, "t40")
    b.info["code"] = code
    b.info["weight_distribution"] = cd.weight_distribution(code)
    return b


def b_t48(p) -> Built:
    arr = json.loads((data_dir() / "t48_arrangement.json").read_text())
    binary = cd.read_code(data_dir() / arr["binary_code"])
    g = ternary_golay_12()
    ternary = cd.direct_sum(g, g)
    # the support conditions are sufficient, not necessary: record them and
    # leave the minimum to the enumeration
    t, info = build_t48(ternary, binary, arr["arrangement"], check_conditions=False)
    info["condition_violations"] = cd.support_conditions_48(
        ternary, info["arranged_binary"], exempt=[tuple(range(12)), tuple(range(12, 24))], limit=10 ** 6)
    base = info["base"]
    return Built(t, [TernaryStage(d_lattice(24), ternary, base)], info)


def named_code(desc) -> LinearCode:
    if isinstance(desc, str):
        if desc.startswith("golay_shortened_"):
            return shortened_golay(int(desc.rsplit("_", 1)[1]))
        if desc == "golay13":
            return golay_13()
        return load_code(desc)
    return cd.code_from_generator(desc["p"], desc["rows"])


BUILDERS: Dict[str, Callable[[dict], Built]] = {
    "e8": b_e8,
    "t10": b_t10,
    "k9": b_k9,
    "k10": b_k10,
    "lambda11max": b_lambda11max,
    "k12_codes": b_k12_codes,
    "k12_glue": b_k12_glue,
    "t16": b_t16,
    "section": b_section,
    "t24_prime": b_t24_prime,
    "leech": b_leech,
    "t22": b_t22,
    "t26": b_t26,
    "w12": b_w12,
    "lambda13": b_lambda13,
    "t14": b_t14,
    "s14": b_s14,
    "dual_forms": b_dual_forms,
    "root_a": b_root_a,
    "equate": b_equate,
    "printed": b_printed,
    "h10": b_h10,
    "l10": b_l10,
    "kappa": b_kappa,
    "t32_v1": b_t32_v1,
    "t32_d16": b_t32_d16,
    "t40": b_t40,
    "t48": b_t48,
}


# ---------------------------------------------------------------------------
# catalog file


def _parse_value(key, v):
    if key in ("det_gram", "min_norm", "center_density_squared", "det_scaled", "unimodular_at"):
        return Fraction(v)
    if key == "second_layer":
        return int(v) if isinstance(v, int) else (Fraction(v[0]), int(v[1]))
    if key == "theta":
        return tuple((Fraction(a), int(b)) for a, b in v)
    return v


@lru_cache(maxsize=None)
def _load(path: str) -> Tuple[CatalogEntry, ...]:
    raw = json.loads(Path(path).read_text())
    out = []
    for e in raw["entries"]:
        exp = {k: Claim(_parse_value(k, c["value"]), c["source"]) for k, c in e.get("expected", {}).items()}
        out.append(CatalogEntry(
            name=e["name"],
            aliases=tuple(e.get("aliases", ())),
            builder=e["builder"],
            params=e.get("params", {}),
            dim=int(e["dim"]),
            ref=e.get("ref", ""),
            report_scale=Fraction(e.get("report_scale", "1")),
            expected=exp,
        ))
    return tuple(out)


def entries() -> Tuple[CatalogEntry, ...]:
    return _load(str(data_dir() / "catalog.json"))


def entry(name: str) -> CatalogEntry:
    for e in entries():
        if name == e.name or name in e.aliases:
            return e
    raise CatalogError(name)


def names(include_aliases: bool = False) -> List[str]:
    out = []
    for e in entries():
        out.append(e.name)
        if include_aliases:
            out.extend(e.aliases)
    return out


def build(name: str, code_files: Optional[Dict[str, str]] = None) -> Built:
    """Build a catalog entry at construction scale.

    ``code_files`` maps entry names to external code files (only ``t40``
    needs one).  The ``TERNLAT_T40_CODE`` environment variable is a fallback.
    """
    e = entry(name)
    params = dict(e.params)
    if e.builder == "t40":
        cf = (code_files or {}).get(e.name) or os.environ.get("TERNLAT_T40_CODE")
        if cf:
            params["code_file"] = cf
    built = BUILDERS[e.builder](params)
    lat = built.lattice.with_name(e.name, e.report_scale)
    return Built(lat, built.stages, built.info)


def filter_entries(expr: Optional[str]) -> List[CatalogEntry]:
    """Filter by ``dim=12``, ``dim<=26``, ``dim>=32`` or a name substring."""
    es = list(entries())
    if not expr:
        return es
    import operator
    import re

    m = re.fullmatch(r"dim\s*(<=|>=|=|==|<|>)\s*(\d+)", expr.strip())
    if m:
        ops = {"<=": operator.le, ">=": operator.ge, "=": operator.eq, "==": operator.eq, "<": operator.lt,
               ">": operator.gt}
        op, v = ops[m.group(1)], int(m.group(2))
        return [e for e in es if op(e.dim, v)]
    return [e for e in es if expr in e.name or any(expr in a for a in e.aliases)]
