"""Exact linear algebra over Z, Q and small prime fields.

Matrices are plain nested lists (row-major).  Integer entries are Python
``int`` and rational entries are :class:`fractions.Fraction`, so nothing in
here ever rounds.  Lattices follow the row convention: the integer row span
of a matrix is the lattice it describes.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence

IntMatrix = List[List[int]]
RatMatrix = List[List[Fraction]]


class NotPositiveDefinite(ValueError):
    """Raised when an LDL pivot is not strictly positive."""


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def rat_matrix(rows) -> RatMatrix:
    return [[to_fraction(x) for x in row] for row in rows]


def int_matrix(rows) -> IntMatrix:
    out = []
    for row in rows:
        r = []
        for x in row:
            f = to_fraction(x)
            if f.denominator != 1:
                raise ValueError(f"non-integral entry {f}")
            r.append(int(f))
        out.append(r)
    return out


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def common_denominator(m) -> int:
    d = 1
    for row in m:
        for x in row:
            d = lcm(d, to_fraction(x).denominator)
    return d


def scale_to_integer(m) -> tuple[IntMatrix, int]:
    """Return ``(d*m, d)`` with ``d`` the least common denominator of ``m``."""
    d = common_denominator(m)
    return [[int(to_fraction(x) * d) for x in row] for row in m], d


# ---------------------------------------------------------------------------
# Hermite normal form


def hnf(generators: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form of the integer row span of ``generators``.

    Pivots are positive, entries above a pivot lie in ``[0, pivot)`` and zero
    rows are dropped.  Rank-deficient input is fine.

    >>> hnf([[2, 0], [0, 2], [1, 1]])
    [[1, 1], [0, 2]]
    """
    rows = [list(map(int, r)) for r in generators if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        if r >= len(rows):
            break
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r], rows[piv] = rows[piv], rows[r]
            p = rows[r][col]
            done = True
            for i in range(r + 1, len(rows)):
                a = rows[i][col]
                if a:
                    q = a // p
                    if q:
                        ri, rr = rows[i], rows[r]
                        rows[i] = [x - q * y for x, y in zip(ri, rr)]
                    if rows[i][col]:
                        done = False
            if done:
                break
        if r < len(rows) and rows[r][col] != 0:
            if rows[r][col] < 0:
                rows[r] = [-x for x in rows[r]]
            p = rows[r][col]
            for i in range(r):
                q = rows[i][col] // p
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
            r += 1
        rows = rows[:r] + [row for row in rows[r:] if any(row)]
    return [row for row in rows if any(row)]


def rational_hnf(generators) -> tuple[RatMatrix, int]:
    """HNF of a rational generating set; returns ``(basis, denominator)``."""
    ints, d = scale_to_integer(generators)
    h = hnf(ints)
    return [[Fraction(x, d) for x in row] for row in h], d


def integer_kernel(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Basis (HNF) of ``{x in Z^n : a x = 0}``."""
    n = ncols if ncols is not None else len(a[0])
    m = len(a)
    if m == 0:
        return identity(n)
    # rows [a^T | I]: reducing the first block leaves kernel rows with zero prefix
    aug = [[a[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)] for j in range(n)]
    h = hnf(aug)
    kern = [row[m:] for row in h if not any(row[:m])]
    return hnf(kern)


def rank_q(m) -> int:
    """Rank over Q."""
    ints, _ = scale_to_integer(m) if m else ([], 1)
    return len(hnf(ints))


# ---------------------------------------------------------------------------
# determinants and exact elimination


def _bareiss(m: IntMatrix) -> int:
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det_exact(m) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("det_exact needs a non-empty square matrix")
    rows = [[to_fraction(x) for x in row] for row in m]
    scale = 1
    ints = []
    for row in rows:
        d = 1
        for x in row:
            d = lcm(d, x.denominator)
        scale *= d
        ints.append([int(x * d) for x in row])
    return Fraction(_bareiss(ints), scale)


def ldl(gram) -> tuple[RatMatrix, List[Fraction]]:
    """Exact ``G = L D L^T`` with ``L`` lower unitriangular.

    Raises :class:`NotPositiveDefinite` on a non-positive pivot.
    """
    g = rat_matrix(gram)
    n = len(g)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D: List[Fraction] = []
    for j in range(n):
        dj = g[j][j] - sum(L[j][k] * L[j][k] * D[k] for k in range(j))
        if dj <= 0:
            raise NotPositiveDefinite(f"pivot {j} is {dj}")
        D.append(dj)
        for i in range(j + 1, n):
            s = g[i][j] - sum(L[i][k] * L[j][k] * D[k] for k in range(j))
            L[i][j] = s / dj
    return L, D


def solve_rational(a, b) -> Optional[List[Fraction]]:
    """One rational solution of ``x a = b`` (row vector times matrix), or None.

    The row convention matches the lattice code: ``b`` is tested for lying in
    the rational row span of ``a``.
    """
    rows = rat_matrix(a)
    m = len(rows)
    n = len(rows[0])
    # solve a^T x = b by Gauss-Jordan on the augmented columns
    aug = [[rows[i][j] for i in range(m)] + [to_fraction(b[j])] for j in range(n)]
    piv_cols = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(aug[i][m] != 0 for i in range(r, n)):
        return None
    x = [Fraction(0)] * m
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][m]
    return x


def inverse(m) -> RatMatrix:
    a = rat_matrix(m)
    n = len(a)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# prime fields


def rref_mod_p(m: Sequence[Sequence[int]], p: int) -> tuple[IntMatrix, int]:
    """Reduced row echelon form over F_p with entries in ``{0..p-1}``.

    Zero rows are kept at the bottom so the shape is preserved; the rank is
    returned alongside.
    """
    a = [[x % p for x in row] for row in m]
    if not a:
        return [], 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return a, r


def pivot_columns(rref: IntMatrix) -> List[int]:
    cols = []
    for row in rref:
        for j, x in enumerate(row):
            if x:
                cols.append(j)
                break
    return cols


def nullspace_mod_p(m: Sequence[Sequence[int]], p: int, ncols: Optional[int] = None) -> IntMatrix:
    """Basis of ``{x : m x = 0 mod p}``."""
    n = ncols if ncols is not None else len(m[0])
    if not m:
        return identity(n)
    red, rank = rref_mod_p(m, p)
    red = red[:rank]
    piv = pivot_columns(red)
    free = [j for j in range(n) if j not in piv]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(red, piv):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def solve_mod_p(a: Sequence[Sequence[int]], b: Sequence[int], p: int) -> Optional[List[int]]:
    """One solution of ``a x = b (mod p)`` or None when inconsistent."""
    if not a:
        return None if any(x % p for x in b) else []
    n = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, rank = rref_mod_p(aug, p)
    x = [0] * n
    for row in red[:rank]:
        lead = next(j for j, v in enumerate(row) if v)
        if lead == n:
            return None
        x[lead] = row[n]
    return x


def congruence_kernel(m: Sequence[Sequence[int]], modulus: int, ncols: int) -> IntMatrix:
    """Basis of ``{y in Z^ncols : m y = 0 mod modulus}``."""
    if not m:
        return identity(ncols)
    k = len(m)
    # y-part of the integer kernel of [m | modulus I]
    big = [list(row) + [modulus if i == j else 0 for j in range(k)] for i, row in enumerate(m)]
    kern = integer_kernel(big, ncols + k)
    return hnf([row[:ncols] for row in kern])


def gcd_list(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
