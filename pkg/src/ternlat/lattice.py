"""Lattices with rational coordinates and weighted columns.

A column that carries entries ``a * sqrt(d)`` is stored as the rational
entries ``a`` together with the column weight ``d``; the inner product is
``<u, v> = sum_j u_j v_j w_j``.  Gram matrices therefore stay rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from . import exact_linalg as xl
from .codes import LinearCode, code_from_generator, zero_code

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class WeightedLattice:
    basis: Tuple[Vector, ...]
    colweights: Tuple[Fraction, ...]
    name: str = ""
    # report-time scale; never applied to the stored coordinates
    scale_squared: Fraction = field(default=Fraction(1), compare=False)

    def __post_init__(self):
        if not self.basis:
            raise ValueError("empty basis")
        n = len(self.colweights)
        if any(len(r) != n for r in self.basis):
            raise ValueError("basis rows and column weights disagree in length")
        if any(w <= 0 for w in self.colweights):
            raise ValueError("column weights must be positive")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.colweights)

    @property
    def unit_weights(self) -> bool:
        return all(w == 1 for w in self.colweights)

    def integral_coordinates(self) -> bool:
        return all(x.denominator == 1 for r in self.basis for x in r)

    def with_name(self, name: str, scale_squared=None) -> "WeightedLattice":
        s = self.scale_squared if scale_squared is None else Fraction(scale_squared)
        return WeightedLattice(self.basis, self.colweights, name, s)

    def inner(self, u, v) -> Fraction:
        return sum((Fraction(a) * b * w for a, b, w in zip(u, v, self.colweights)), Fraction(0))

    def norm(self, v) -> Fraction:
        return self.inner(v, v)

    def vector(self, coeffs: Sequence[int]) -> Vector:
        """Ambient coordinates of ``sum_i coeffs[i] * basis[i]``."""
        n = self.ambient_dim
        out = [Fraction(0)] * n
        for c, row in zip(coeffs, self.basis):
            if c:
                for j in range(n):
                    out[j] += c * row[j]
        return tuple(out)


def make_lattice(rows, colweights=None, name: str = "", scale_squared=1, rebase: bool = True) -> WeightedLattice:
    """Lattice spanned by ``rows`` (any generating set); HNF-rebased by default."""
    rows = xl.rat_matrix(rows)
    n = len(rows[0])
    w = tuple(Fraction(1) for _ in range(n)) if colweights is None else tuple(xl.to_fraction(x) for x in colweights)
    if rebase:
        basis, _ = xl.rational_hnf(rows)
    else:
        basis = rows
        if xl.rank_q(basis) != len(basis):
            raise ValueError("basis rows are linearly dependent")
    if not basis:
        raise ValueError("zero lattice")
    return WeightedLattice(tuple(tuple(r) for r in basis), w, name, Fraction(scale_squared))


def integer_lattice(n: int, name: str = "") -> WeightedLattice:
    return make_lattice(xl.identity(n), name=name or f"Z{n}")


def _weights_int(l: WeightedLattice) -> Tuple[List[int], int]:
    den = 1
    for w in l.colweights:
        den = lcm(den, w.denominator)
    return [int(w * den) for w in l.colweights], den


def gram(l: WeightedLattice) -> List[List[Fraction]]:
    """Exact Gram matrix ``G[i][j] = <b_i, b_j>``."""
    b, d = xl.scale_to_integer(l.basis)
    w, wd = _weights_int(l)
    bw = [[x * y for x, y in zip(row, w)] for row in b]
    m = l.rank
    g = [[Fraction(0)] * m for _ in range(m)]
    den = d * d * wd
    for i in range(m):
        ri = bw[i]
        for j in range(i, m):
            v = Fraction(sum(x * y for x, y in zip(ri, b[j])), den)
            g[i][j] = g[j][i] = v
    return g


def det_gram(l: WeightedLattice) -> Fraction:
    return xl.det_exact(gram(l))


def scaled_gram(l: WeightedLattice, scale_squared) -> List[List[Fraction]]:
    s = Fraction(scale_squared)
    return [[x * s for x in row] for row in gram(l)]


def is_even_integral(l: WeightedLattice, scale_squared=1) -> Tuple[bool, bool]:
    g = scaled_gram(l, scale_squared)
    integral = all(x.denominator == 1 for row in g for x in row)
    even = integral and all(g[i][i] % 2 == 0 for i in range(len(g)))
    return integral, even


def is_unimodular(l: WeightedLattice, scale_squared=1) -> bool:
    g = scaled_gram(l, scale_squared)
    if any(x.denominator != 1 for row in g for x in row):
        return False
    return abs(xl.det_exact(g)) == 1


def center_density_squared(l: WeightedLattice, min_norm, det=None) -> Fraction:
    """``(min/4)^rank / det`` at the lattice's stored scale."""
    m = Fraction(min_norm)
    if m <= 0:
        raise ValueError("minimum norm must be positive")
    d = det_gram(l) if det is None else Fraction(det)
    return (m / 4) ** l.rank / d


def solution_lattice(n: int, equations=(), congruences=(), name: str = "") -> WeightedLattice:
    """Basis of ``{x in Z^n : A x = 0, B_i x = 0 mod m_i}``.

    ``congruences`` is a list of ``(B, m)`` pairs where ``B`` is a matrix of
    linear forms.
    """
    eq = [list(map(int, r)) for r in equations]
    basis = xl.integer_kernel(eq, n) if eq else xl.identity(n)
    for forms, modulus in congruences:
        forms = [list(map(int, r)) for r in forms]
        m = [[sum(f[j] * k[j] for j in range(n)) for k in basis] for f in forms]
        ys = xl.congruence_kernel(m, int(modulus), len(basis))
        basis = xl.hnf([[sum(y[i] * basis[i][j] for i in range(len(basis))) for j in range(n)] for y in ys])
    if not basis:
        raise ValueError("solution lattice is zero")
    return make_lattice(basis, name=name)


def lattice_mod_p_code(l: WeightedLattice, p: int) -> LinearCode:
    if not l.integral_coordinates():
        raise ValueError("lattice_mod_p_code needs integral coordinates")
    rows = [[int(x) % p for x in r] for r in l.basis]
    if not any(any(r) for r in rows):
        return zero_code(p, l.ambient_dim)
    return code_from_generator(p, rows)


def sublattice_by_forms(l: WeightedLattice, forms, name: str = "") -> WeightedLattice:
    """``{v in l : f(v) = 0}`` for ambient linear forms ``f`` (plain dot products)."""
    cols = []
    for f in forms:
        f = [xl.to_fraction(x) for x in f]
        cols.append([sum((x * y for x, y in zip(row, f)), Fraction(0)) for row in l.basis])
    ints, _ = xl.scale_to_integer(cols)
    ys = xl.integer_kernel(ints, l.rank)
    if not ys:
        raise ValueError("sublattice is zero")
    return make_lattice([l.vector(y) for y in ys], l.colweights, name or l.name, l.scale_squared)


def equate_coordinates(l: WeightedLattice, i: int, j: int, name: str = "") -> WeightedLattice:
    """Sublattice ``{v in l : v_i = v_j}`` (0-based columns)."""
    if i == j:
        raise ValueError("equate_coordinates needs two distinct columns")
    f = [0] * l.ambient_dim
    f[i], f[j] = 1, -1
    return sublattice_by_forms(l, [f], name)


def orthogonal_section(l: WeightedLattice, u, name: str = "") -> WeightedLattice:
    """Sublattice of vectors orthogonal to ``u`` under the weighted product."""
    f = [xl.to_fraction(a) * w for a, w in zip(u, l.colweights)]
    return sublattice_by_forms(l, [f], name)


def coordinates(l: WeightedLattice, v) -> Optional[List[Fraction]]:
    """Rational coordinates of ``v`` in the basis of ``l`` (None if outside the span)."""
    return xl.solve_rational(l.basis, v)


def contains(l: WeightedLattice, v) -> bool:
    x = coordinates(l, v)
    return x is not None and all(c.denominator == 1 for c in x)


def index_in(sub: WeightedLattice, sup: WeightedLattice) -> Fraction:
    """``[sup : sub]`` computed from determinants (same rank assumed)."""
    r = det_gram(sub) / det_gram(sup)
    num, den = r.numerator, r.denominator
    from math import isqrt

    a, b = isqrt(num), isqrt(den)
    if a * a != num or b * b != den:
        raise ValueError("index is not rational; lattices have different spans")
    return Fraction(a, b)


def scaled_lattice(l: WeightedLattice, factor) -> WeightedLattice:
    f = xl.to_fraction(factor)
    return WeightedLattice(tuple(tuple(x * f for x in r) for r in l.basis), l.colweights, l.name, l.scale_squared)


# ---------------------------------------------------------------------------
# interchange: JSON with rationals written as "p/q" strings


def _rat_str(x: Fraction) -> str:
    return str(Fraction(x))


def lattice_to_dict(l: WeightedLattice) -> dict:
    return {
        "name": l.name,
        "ambient_dim": l.ambient_dim,
        "rank": l.rank,
        "basis": [[_rat_str(x) for x in r] for r in l.basis],
        "colweights": [_rat_str(w) for w in l.colweights],
        "scale_squared_for_report": _rat_str(l.scale_squared),
    }


def lattice_from_dict(d: dict) -> WeightedLattice:
    basis = tuple(tuple(Fraction(x) for x in r) for r in d["basis"])
    w = tuple(Fraction(x) for x in d["colweights"])
    l = WeightedLattice(basis, w, d.get("name", ""), Fraction(d.get("scale_squared_for_report", "1")))
    if "rank" in d and d["rank"] != l.rank or "ambient_dim" in d and d["ambient_dim"] != l.ambient_dim:
        raise ValueError("rank or ambient_dim disagrees with the basis")
    if xl.rank_q(basis) != len(basis):
        raise ValueError("basis rows are linearly dependent")
    return l


def gram_to_strings(g) -> List[List[str]]:
    return [[_rat_str(x) for x in r] for r in g]


def dumps(l: WeightedLattice) -> str:
    import json

    return json.dumps(lattice_to_dict(l), indent=1)


def loads(text: str) -> WeightedLattice:
    import json

    return lattice_from_dict(json.loads(text))
