"""Lattice constructions driven by ternary (and binary) codes.

Coordinates of the three-row constructions are flattened row-major: a vector
``(x, y, z)`` with ``x, y, z`` in ``Q^n`` is stored as ``x + y + z``
(concatenation), so column ``j`` of row ``i`` lives at index ``i*n + j``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence

from . import exact_linalg as xl
from .codes import LinearCode, dual_code, weight_distribution
from .lattice import (
    WeightedLattice,
    contains,
    coordinates,
    det_gram,
    lattice_mod_p_code,
    make_lattice,
    solution_lattice,
)


class ConstructionError(ValueError):
    """A precondition of a construction failed."""


# ---------------------------------------------------------------------------
# helpers for row-major three-row vectors


def rows3(x, y, z) -> List[Fraction]:
    return [Fraction(a) for a in list(x) + list(y) + list(z)]


def neg(v):
    return [-a for a in v]


def zeros(n):
    return [Fraction(0)] * n


def glue_vector_12(x) -> List[Fraction]:
    """``(x, -x, 0)``."""
    return rows3(x, neg(x), zeros(len(x)))


def glue_vector_23(x) -> List[Fraction]:
    """``(0, x, -x)``."""
    return rows3(zeros(len(x)), x, neg(x))


def glue_vector_31(x) -> List[Fraction]:
    """``(-x, 0, x)``."""
    return rows3(neg(x), zeros(len(x)), x)


def d_lattice(n: int) -> WeightedLattice:
    """``D_n``: integer vectors with even coordinate sum."""
    return solution_lattice(n, congruences=[([[1] * n], 2)], name=f"D{n}")


def a_lattice(n: int) -> WeightedLattice:
    """``A_n`` inside ``Z^(n+1)``: coordinate sum zero."""
    return solution_lattice(n + 1, [[1] * (n + 1)], name=f"A{n}")


# ---------------------------------------------------------------------------
# three-row lattice and T(C)


def triple(l: WeightedLattice) -> WeightedLattice:
    """``E = {(x, y, z) in l^3 : x + y + z = 0}`` of rank ``2 * rank(l)``."""
    rows = []
    for b in l.basis:
        rows.append(glue_vector_12(b))
        rows.append(glue_vector_23(b))
    return make_lattice(rows, tuple(l.colweights) * 3, name=f"E({l.name})" if l.name else "")


def check_3z_condition(l: WeightedLattice) -> bool:
    """``3 Z^n`` meets ``l`` exactly in ``3 l``.

    ``l / (l ∩ 3Z^n)`` is the code ``C_{l,3}``, while ``l / 3l`` has order
    ``3^rank``, so the condition says the code has full dimension.
    """
    if not l.integral_coordinates():
        raise ConstructionError("the 3Z condition needs integral coordinates")
    return lattice_mod_p_code(l, 3).k == l.rank


def lift_codeword(l: WeightedLattice, word: Sequence[int]) -> List[Fraction]:
    """A vector of ``l`` congruent to ``word`` mod 3.

    The signed lift with entries in ``{-1, 0, 1}`` is used when it lies in
    ``l``; otherwise a solution of ``y B = word (mod 3)`` with ``y`` in
    ``{0, 1, 2}`` is taken, ``B`` being the HNF basis.
    """
    signed = [Fraction(((int(a) + 1) % 3) - 1) for a in word]
    if contains(l, signed):
        return signed
    b = [[int(x) for x in row] for row in l.basis]
    bt = xl.transpose(b)
    y = xl.solve_mod_p(bt, [int(a) % 3 for a in word], 3)
    if y is None:
        raise ConstructionError(f"codeword {tuple(word)} is not in C_(L,3)")
    return [Fraction(sum(y[i] * b[i][j] for i in range(len(b)))) for j in range(len(word))]


def ternary_construction(l: WeightedLattice, c: LinearCode, name: str = "", check: bool = True) -> WeightedLattice:
    """``T(C)``: ``3E`` together with ``(v, v, -2v)`` for a lift ``v`` of each generator."""
    if c.p != 3:
        raise ConstructionError("ternary_construction needs a code over F3")
    if c.n != l.ambient_dim:
        raise ConstructionError("code length differs from the ambient dimension")
    if check and not check_3z_condition(l):
        raise ConstructionError("3Z^n ∩ L differs from 3L")
    e = triple(l)
    rows = [[3 * a for a in r] for r in e.basis]
    for g in c.generator:
        v = lift_codeword(l, g)
        rows.append(rows3(v, v, [-2 * a for a in v]))
    return make_lattice(rows, tuple(l.colweights) * 3, name=name)


def ternary_volume_identity(l: WeightedLattice, c: LinearCode, t: WeightedLattice) -> bool:
    """``det T(C) = det(L)^2 * 3^(5r - 2k)``."""
    return det_gram(t) == det_gram(l) ** 2 * Fraction(3) ** (5 * l.rank - 2 * c.k)


# ---------------------------------------------------------------------------
# gluing


def _frac_key(v):
    return tuple(a - (a.numerator // a.denominator) for a in v)


def glue_group_order(base: WeightedLattice, leaders) -> int:
    """Order of the subgroup of ``span / base`` generated by ``leaders``."""
    keys = {tuple(Fraction(0) for _ in range(base.rank))}
    gens = []
    for v in leaders:
        y = coordinates(base, v)
        if y is None:
            raise ConstructionError("glue vector outside the span of the base lattice")
        gens.append(_frac_key(y))
    frontier = list(keys)
    while frontier:
        nxt = []
        for k in frontier:
            for g in gens:
                s = _frac_key([a + b for a, b in zip(k, g)])
                if s not in keys:
                    keys.add(s)
                    nxt.append(s)
        frontier = nxt
        if len(keys) > 1 << 26:
            raise ConstructionError("glue group too large to enumerate")
    return len(keys)


def leaders_closed(base: WeightedLattice, leaders) -> bool:
    """True when ``{0} ∪ leaders`` is a complete set of coset representatives of a group."""
    keys = set()
    zero = tuple(Fraction(0) for _ in range(base.rank))
    keys.add(zero)
    for v in leaders:
        y = coordinates(base, v)
        if y is None:
            return False
        keys.add(_frac_key(y))
    if len(keys) != len(leaders) + 1:
        return False
    for a in keys:
        for b in keys:
            if _frac_key([x + y for x, y in zip(a, b)]) not in keys:
                return False
    return True


def glue(base: WeightedLattice, leaders, expected_index: Optional[int] = None, name: str = "",
         closed_set: bool = False, extend: int = 0) -> WeightedLattice:
    """Lattice generated by ``base`` and the glue vectors ``leaders``.

    With ``closed_set`` the leaders must already be a full set of nonzero coset
    representatives of a group (the usual "union of translates" statement).
    The index over ``base`` is checked against ``expected_index`` when given.

    ``extend`` > 0 declares a laminating step: the leaders leave the span and
    the rank must grow by exactly that much.  No index exists in that case.
    """
    leaders = [xl.rat_matrix([v])[0] for v in leaders]
    if not leaders:
        return base.with_name(name or base.name)
    for v in leaders:
        if len(v) != base.ambient_dim:
            raise ConstructionError("glue vector has the wrong length")
    if extend:
        if closed_set or expected_index is not None:
            raise ConstructionError("an index check makes no sense when the rank grows")
        new = make_lattice(list(base.basis) + leaders, base.colweights, name=name or base.name,
                           scale_squared=base.scale_squared)
        if new.rank != base.rank + extend:
            raise ConstructionError(f"rank grew from {base.rank} to {new.rank}, expected +{extend}")
        return new
    for v in leaders:
        if coordinates(base, v) is None:
            raise ConstructionError("glue vector outside the span of the base lattice")
    if closed_set and not leaders_closed(base, leaders):
        raise ConstructionError("glue vectors do not form a group modulo the base")
    new = make_lattice(list(base.basis) + leaders, base.colweights, name=name or base.name,
                       scale_squared=base.scale_squared)
    if new.rank != base.rank:
        raise ConstructionError("glue vectors enlarge the rank")
    ratio = det_gram(base) / det_gram(new)
    from math import isqrt

    idx = isqrt(ratio.numerator)
    if ratio.denominator != 1 or idx * idx != ratio.numerator:
        raise ConstructionError(f"index is not an integer: det ratio {ratio}")
    want = expected_index if expected_index is not None else (len(leaders) + 1 if closed_set else None)
    if want is not None and idx != want:
        raise ConstructionError(f"index {idx} differs from the expected {want}")
    return new


def add_column(l: WeightedLattice, weight, count: int = 1) -> WeightedLattice:
    """Append ``count`` zero columns of weight ``weight`` to each of the three rows.

    The result is the same lattice in a wider ambient space, ready for glue
    vectors that use the new (typically irrational) coordinate.
    """
    if l.ambient_dim % 3:
        raise ConstructionError("add_column needs a three-row lattice")
    n = l.ambient_dim // 3
    w = xl.to_fraction(weight)
    pad = [Fraction(0)] * count
    rows = [list(r[:n]) + pad + list(r[n:2 * n]) + pad + list(r[2 * n:]) + pad for r in l.basis]
    cw = list(l.colweights)
    cws = cw[:n] + [w] * count + cw[n:2 * n] + [w] * count + cw[2 * n:] + [w] * count
    return WeightedLattice(tuple(tuple(r) for r in rows), tuple(cws), l.name, l.scale_squared)


# ---------------------------------------------------------------------------
# Construction A and the Kappa family


def construction_a_binary(c: LinearCode, name: str = "") -> WeightedLattice:
    """``{x in Z^n : x mod 2 in C}``."""
    if c.p != 2:
        raise ConstructionError("construction A here is binary")
    rows = [[2 * int(i == j) for j in range(c.n)] for i in range(c.n)]
    rows += [list(g) for g in c.generator]
    return make_lattice(rows, name=name)


def kappa_family(n: int, c: LinearCode, name: str = "", require_zero_sum: bool = False) -> WeightedLattice:
    """Rank-2n lattice in ``(Z^n)^3``: columns sum to zero, the first row sums to
    0 mod 3, and the difference of the first two rows reduces into ``C``."""
    if c.p != 3 or c.n != n:
        raise ConstructionError("kappa_family needs a ternary code of length n")
    if require_zero_sum and any(sum(g) % 3 for g in c.generator):
        raise ConstructionError("some codeword has nonzero coordinate sum")
    eqs = []
    for j in range(n):
        r = [0] * (3 * n)
        r[j] = r[n + j] = r[2 * n + j] = 1
        eqs.append(r)
    cong = [[1] * n + [0] * (2 * n)]
    h = dual_code(c)
    for row in h.generator:
        cong.append(list(row) + [(-a) % 3 for a in row] + [0] * n)
    return solution_lattice(3 * n, eqs, [(cong, 3)], name=name)


def kissing_formula_11(n: int, a6: int) -> int:
    """``binom(n, 2) * 18 + 243 * A6``."""
    if n < 2 or a6 < 0:
        raise ValueError("need n >= 2 and A6 >= 0")
    return comb(n, 2) * 18 + 243 * a6


def kappa_expected_det(n: int, k: int) -> Fraction:
    return Fraction(3) ** (3 * n - 2 * k + 2)


# ---------------------------------------------------------------------------
# dimension 48


def t48_leaders(binary_basis: Sequence[Sequence[int]], duum_minus=((0, 1, 2), (12,))):
    """Glue generators for the 48-dimensional lattice.

    ``binary_basis`` lists 12 binary words whose first two are the duum
    dodecads on ``{0..11}`` and ``{12..23}``.  Returns ``(x-leaders, y-leaders)``.
    """
    h = Fraction(3, 2)
    xs = []
    for idx, w in enumerate(binary_basis):
        x = [h if a else Fraction(0) for a in w]
        if idx < 2:
            for p in duum_minus[idx]:
                x[p] = -h
        xs.append(x)
    minus = set(duum_minus[0]) | set(duum_minus[1])
    y = [Fraction(-3, 4) if j in minus else Fraction(3, 4) for j in range(24)]
    xl_ = [glue_vector_12(x) for x in xs] + [glue_vector_23(x) for x in xs]
    return xl_, [glue_vector_12(y), glue_vector_23(y)]


def build_t48(ternary: LinearCode, binary: LinearCode, arrangement: Sequence[int], name: str = "t48",
              check_conditions: bool = True):
    """The 48-dimensional lattice, at construction scale (even unimodular at 2/9).

    ``arrangement`` permutes the binary code's coordinates so that the duum
    sits on ``{0..11}`` / ``{12..23}``: coordinate ``j`` of the arranged code is
    coordinate ``arrangement[j]`` of ``binary``.  Returns ``(lattice, info)``.
    """
    from .codes import min_distance, permute, support_conditions_48

    if ternary.n != 24 or binary.n != 24:
        raise ConstructionError("build_t48 needs codes of length 24")
    if not (2 * ternary.k == 24 and all(
            sum(a * b for a, b in zip(r, s)) % 3 == 0 for r in ternary.generator for s in ternary.generator)):
        raise ConstructionError("ternary code is not self-dual")
    arranged = permute(binary, arrangement)
    left = tuple([1] * 12 + [0] * 12)
    right = tuple([0] * 12 + [1] * 12)
    if left not in arranged or right not in arranged:
        raise ConstructionError("arranged binary code has no duum on the two halves")
    dist = weight_distribution(arranged)
    if dist[8] != 759 or dist[12] != 2576:
        raise ConstructionError("binary code is not the Golay code")
    if min_distance(ternary) < 6:
        raise ConstructionError("ternary code has minimum distance below 6")
    if check_conditions:
        bad = support_conditions_48(ternary, arranged, exempt=[tuple(range(12)), tuple(range(12, 24))])
        if bad:
            raise ConstructionError(f"support condition {bad[0][0]} fails at ternary support {bad[0][1]}")
    # basis of the arranged code starting with the duum words
    rest = []
    cur = [list(left), list(right)]
    for g in arranged.generator:
        _, r = xl.rref_mod_p(cur + [list(g)], 2)
        if r > len(cur):
            cur.append(list(g))
            rest.append(list(g))
    basis = [list(left), list(right)] + rest
    if len(basis) != 12:
        raise ConstructionError("could not complete the duum to a basis")
    d24 = d_lattice(24)
    base = ternary_construction(d24, ternary, name="t48_prime")
    xs, ys = t48_leaders(basis)
    t2 = glue(base, xs, expected_index=2 ** 24, name="t48_double_prime")
    t = glue(t2, ys, expected_index=4, name=name)
    return t, {"base": base, "intermediate": t2, "binary_basis": basis, "arranged_binary": arranged}
