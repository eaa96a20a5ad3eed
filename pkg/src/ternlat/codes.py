"""Linear codes over F2 and F3.

Field elements are stored as ``{0, .., p-1}``; over F3 the element 2 plays the
role of -1 and :func:`format_matrix` prints it that way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .exact_linalg import nullspace_mod_p, rref_mod_p

MAX_CODEWORDS = 2 ** 24


class ZeroCodeError(ValueError):
    pass


@dataclass(frozen=True)
class LinearCode:
    """A linear ``[n, k]`` code over F_p given by a row-reduced generator.

    ``k == 0`` is allowed and denotes the zero code of length ``n``.
    """

    p: int
    n: int
    k: int
    generator: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.p not in (2, 3):
            raise ValueError("only p = 2 and p = 3 are supported")
        if len(self.generator) != self.k:
            raise ValueError("generator height does not match k")

    @property
    def rows(self) -> List[List[int]]:
        return [list(r) for r in self.generator]

    def signed_rows(self) -> List[List[int]]:
        """Generator with entries lifted to ``{-1, 0, 1}`` (p = 3) or ``{0, 1}``."""
        return [[_signed(x, self.p) for x in r] for r in self.generator]

    def codewords(self) -> np.ndarray:
        """All ``p**k`` codewords as an ``(p**k, n)`` int8 array."""
        if self.p ** self.k > MAX_CODEWORDS:
            raise ValueError(f"{self.p}^{self.k} codewords exceed the enumeration guard")
        if self.k == 0:
            return np.zeros((1, self.n), dtype=np.int8)
        coeffs = np.array(list(itertools.product(range(self.p), repeat=self.k)), dtype=np.int64)
        g = np.array(self.generator, dtype=np.int64)
        return ((coeffs @ g) % self.p).astype(np.int8)

    def __contains__(self, word) -> bool:
        w = [int(x) % self.p for x in word]
        if len(w) != self.n:
            return False
        if self.k == 0:
            return not any(w)
        _, r = rref_mod_p(self.rows + [w], self.p)
        return r == self.k

    def same_span(self, other: "LinearCode") -> bool:
        return (self.p, self.n, self.generator) == (other.p, other.n, other.generator)

    def __str__(self) -> str:
        return f"[{self.n},{self.k}]_{self.p}"


def _signed(x: int, p: int) -> int:
    x %= p
    return x - p if (p == 3 and x == 2) else x


def code_from_generator(p: int, rows: Sequence[Sequence[int]], allow_zero: bool = False) -> LinearCode:
    """Build a code from any spanning rows; the stored generator is the RREF."""
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        raise ZeroCodeError("no generator rows")
    n = len(rows[0])
    red, k = rref_mod_p(rows, p)
    if k == 0 and not allow_zero:
        raise ZeroCodeError("all generator rows vanish mod p")
    return LinearCode(p, n, k, tuple(tuple(r) for r in red[:k]))


def zero_code(p: int, n: int) -> LinearCode:
    return LinearCode(p, n, 0, ())


def full_space(p: int, n: int) -> LinearCode:
    return code_from_generator(p, [[int(i == j) for j in range(n)] for i in range(n)])


def weight_distribution(c: LinearCode) -> List[int]:
    """``A_0 .. A_n`` by enumerating every codeword."""
    words = c.codewords()
    w = np.count_nonzero(words, axis=1)
    return np.bincount(w, minlength=c.n + 1).astype(int).tolist()


def min_distance(c: LinearCode) -> int:
    dist = weight_distribution(c)
    return next((i for i in range(1, c.n + 1) if dist[i]), 0)


def dual_code(c: LinearCode) -> LinearCode:
    if c.k == 0:
        return full_space(c.p, c.n)
    basis = nullspace_mod_p(c.rows, c.p, c.n)
    if not basis:
        return zero_code(c.p, c.n)
    return code_from_generator(c.p, basis)


def is_self_orthogonal(c: LinearCode) -> bool:
    return all(sum(a * b for a, b in zip(r, s)) % c.p == 0 for r in c.generator for s in c.generator)


def is_self_dual(c: LinearCode) -> bool:
    return 2 * c.k == c.n and is_self_orthogonal(c)


def shorten(c: LinearCode, positions: Iterable[int]) -> LinearCode:
    """Codewords vanishing on ``positions`` (0-based), with those coordinates removed."""
    pos = sorted(set(positions))
    if not pos:
        return c
    if any(not 0 <= q < c.n for q in pos):
        raise IndexError("shortening position out of range")
    keep = [j for j in range(c.n) if j not in pos]
    if c.k == 0:
        return zero_code(c.p, len(keep))
    # coefficient vectors y with (y G) restricted to pos equal to zero
    cols = [[c.generator[i][q] for i in range(c.k)] for q in pos]
    ys = nullspace_mod_p(cols, c.p, c.k)
    if not ys:
        return zero_code(c.p, len(keep))
    words = [[sum(y[i] * c.generator[i][j] for i in range(c.k)) % c.p for j in keep] for y in ys]
    return code_from_generator(c.p, words, allow_zero=True)


def puncture(c: LinearCode, positions: Iterable[int]) -> LinearCode:
    pos = set(positions)
    keep = [j for j in range(c.n) if j not in pos]
    return code_from_generator(c.p, [[r[j] for j in keep] for r in c.generator], allow_zero=True)


def direct_sum(a: LinearCode, b: LinearCode) -> LinearCode:
    if a.p != b.p:
        raise ValueError("field mismatch")
    rows = [list(r) + [0] * b.n for r in a.generator] + [[0] * a.n + list(r) for r in b.generator]
    return code_from_generator(a.p, rows)


def permute(c: LinearCode, perm: Sequence[int]) -> LinearCode:
    """Coordinate ``j`` of the result is coordinate ``perm[j]`` of ``c``."""
    return code_from_generator(c.p, [[r[perm[j]] for j in range(c.n)] for r in c.generator])


def format_matrix(rows, p: int = 3) -> str:
    out = []
    for r in rows:
        out.append(" ".join(f"{_signed(x, p):2d}" for x in r))
    return "\n".join(out)


# ---------------------------------------------------------------------------
# file format: header "p n k" then k rows of integers


def read_code(path) -> LinearCode:
    lines = [ln.split("#", 1)[0].strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError(f"{path}: empty code file")
    p, n, k = map(int, lines[0].split())
    rows = [list(map(int, ln.split())) for ln in lines[1:]]
    if len(rows) != k or any(len(r) != n for r in rows):
        raise ValueError(f"{path}: header says {k}x{n}, found {len(rows)} rows")
    c = code_from_generator(p, rows)
    if c.k != k:
        raise ValueError(f"{path}: generator has rank {c.k}, header says {k}")
    return c


def write_code(c: LinearCode, path, rows=None, comment: str = "") -> None:
    rows = rows if rows is not None else c.signed_rows()
    body = "\n".join(" ".join(str(x) for x in r) for r in rows)
    head = f"# {comment}\n" if comment else ""
    Path(path).write_text(f"{head}{c.p} {c.n} {len(rows)}\n{body}\n")


# ---------------------------------------------------------------------------
# the dimension-48 support conditions


def _supports_by_weight(words: np.ndarray, weights: Iterable[int]) -> dict:
    mask = words != 0
    w = mask.sum(axis=1)
    out = {}
    for t in weights:
        sel = mask[w == t]
        out[t] = np.packbits(sel, axis=1, bitorder="little")
    return out


def _as_int(bits: np.ndarray) -> np.ndarray:
    padded = np.zeros((bits.shape[0], 8), dtype=np.uint8)
    padded[:, : bits.shape[1]] = bits
    return padded.view("<u8").ravel()


def _bits(m: int) -> Tuple[int, ...]:
    return tuple(i for i in range(64) if m >> i & 1)


def support_conditions_48(ternary: LinearCode, binary: LinearCode, exempt=(), limit: int = 1000):
    """Check the three support conditions on a ternary/binary pair of length 24.

    1. no weight-6 ternary support lies inside an octad,
    2. no weight-9 ternary support contains an octad,
    3. no weight-12 ternary support equals a dodecad or a union of two octads.

    ``exempt`` lists binary codeword supports (as position tuples) that are
    ignored in condition 3.  Returns a list of ``(condition, ternary support,
    binary support)`` triples; empty means every condition holds.  At most
    ``limit`` violations are collected.
    """
    if ternary.n != 24 or binary.n != 24 or ternary.p != 3 or binary.p != 2:
        raise ValueError("support_conditions_48 needs a ternary and a binary code of length 24")
    tw = _supports_by_weight(ternary.codewords(), (6, 9, 12))
    bw = _supports_by_weight(binary.codewords(), (8, 12))
    t6, t9, t12 = (np.unique(_as_int(tw[t])) for t in (6, 9, 12))
    octads = np.unique(_as_int(bw[8])) if len(bw[8]) else np.zeros(0, dtype=np.uint64)
    dodecads = np.unique(_as_int(bw[12])) if len(bw[12]) else np.zeros(0, dtype=np.uint64)
    ex = set()
    for s in exempt:
        m = 0
        for i in s:
            m |= 1 << int(i)
        ex.add(m)
    out = []

    def add(cond, t, b):
        if len(out) < limit:
            out.append((cond, _bits(int(t)), _bits(int(b))))

    for o in octads:
        inside = t6[(t6 & ~o) == 0]
        for t in inside:
            add(1, t, o)
        contains = t9[(t9 & o) == o]
        for t in contains:
            add(2, t, o)
    t12set = set(int(x) for x in t12)
    for d in dodecads:
        if int(d) in t12set and int(d) not in ex:
            add(3, d, d)
    if len(octads):
        # two octads meet in 0, 2 or 4 points; only the 4-point case has a 12-point union
        for i, o in enumerate(octads):
            rest = octads[i + 1:]
            u = rest[np.bitwise_count(rest & o) == 4] | o
            for m in u:
                if int(m) in t12set and int(m) not in ex:
                    add(3, m, m)
    return out
