"""Short-vector enumeration with exact rechecking.

The pipeline is: scale the Gram matrix to integers, LLL-reduce it (exact
transform), take an exact LDL factorisation, then run a floating-point
Schnorr-Euchner enumeration with a small relative slack on the radius.  Every
candidate is re-evaluated exactly, so the float pass can only produce extra
candidates, never lose one.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import flint
import numpy as np

from . import exact_linalg as xl
from ._kernels import MODE_COLLECT, MODE_FLOAT, MODE_HIST, enum_shard

log = logging.getLogger(__name__)

SLACK = 1e-6
MAX_PIVOT_RATIO = 1e12
_INT64_SAFE = 2 ** 62
_MAX_HIST_BINS = 50_000_000


@dataclass
class ShortVectorReport:
    min_norm: Fraction
    kissing_number: int
    second_layer_norm: Optional[Fraction] = None
    second_layer_count: Optional[int] = None
    theta_prefix: List[Tuple[Fraction, int]] = field(default_factory=list)
    bound: Optional[Fraction] = None


def _int_gram(gram) -> Tuple[List[List[int]], int]:
    g = xl.rat_matrix(gram)
    n = len(g)
    if any(len(r) != n for r in g):
        raise ValueError("Gram matrix must be square")
    for i in range(n):
        for j in range(i):
            if g[i][j] != g[j][i]:
                raise ValueError("Gram matrix is not symmetric")
    d = xl.common_denominator(g)
    return [[int(x * d) for x in r] for r in g], d


def lll_reduce(gram, delta: float = 0.99) -> Tuple[List[List[Fraction]], List[List[int]]]:
    """LLL-reduce a Gram matrix.  Returns ``(T G T^t, T)`` with ``T`` unimodular."""
    gi, d = _int_gram(gram)
    n = len(gi)
    red, t = flint.fmpz_mat(gi).lll(transform=True, delta=delta, rep="gram", gram="exact")
    tm = [[int(t[i, j]) for j in range(n)] for i in range(n)]
    ri = xl.matmul(xl.matmul(tm, gi), xl.transpose(tm))
    # the reduced Gram is recomputed exactly from the transform
    if any(int(red[i, j]) != ri[i][j] for i in range(n) for j in range(n)):
        raise ArithmeticError("LLL output does not match its transform")
    return [[Fraction(x, d) for x in r] for r in ri], tm


class Enumerator:
    """Prepared enumeration context for one Gram matrix.

    Coefficient vectors reported by the public methods always refer to the
    basis of the Gram matrix passed in, not to the internal reduced basis.
    """

    def __init__(self, gram, workers: int = 1, reduce: bool = True):
        self.gram = xl.rat_matrix(gram)
        self.n = len(self.gram)
        self.workers = max(1, int(workers))
        gi, self.den = _int_gram(self.gram)
        if reduce and self.n > 1:
            red, self.transform = lll_reduce(self.gram)
            self.gint = [[int(x * self.den) for x in r] for r in red]
        else:
            self.transform = xl.identity(self.n)
            self.gint = gi
        L, D = xl.ldl(self.gint)
        self.mu = np.array([[float(x) for x in r] for r in L])
        self.d = np.array([float(x) for x in D])
        self.exact_d = D
        # float inverse is enough here: it only sizes the int64 overflow guard
        self.ginv_diag = np.diag(np.linalg.inv(np.array(self.gint, dtype=float))) * 1.01
        ratio = max(self.d) / min(self.d)
        self.well_conditioned = ratio <= MAX_PIVOT_RATIO
        self.gint64 = None
        if all(abs(x) < _INT64_SAFE for r in self.gint for x in r):
            self.gint64 = np.array(self.gint, dtype=np.int64)

    # -- helpers ---------------------------------------------------------
    def _scaled_bound(self, bound) -> int:
        b = Fraction(bound) * self.den
        return b.numerator // b.denominator

    def _int64_ok(self, bound_int: int) -> bool:
        """True when every partial sum of x^T G x fits comfortably in int64."""
        if self.gint64 is None:
            return False
        xs = [int(math.sqrt(bound_int * g)) + 2 for g in self.ginv_diag]
        total = 0
        for i in range(self.n):
            for j in range(self.n):
                total += abs(self.gint[i][j]) * xs[i] * xs[j]
        return total < _INT64_SAFE

    def _radius(self, bound_int) -> float:
        return float(bound_int) * (1.0 + SLACK) + 1e-9

    def _top_values(self, radius: float, t_top: float, svp: bool) -> List[int]:
        span = math.sqrt(radius / self.d[-1]) + 1e-9
        lo = math.ceil(t_top - span)
        hi = math.floor(t_top + span)
        if svp:
            lo = max(lo, 0)
        return list(range(lo, hi + 1))

    def _run(self, bound_int, mode, t=None, svp=True, capacity=0):
        radius = self._radius(bound_int)
        tt = np.zeros(self.n) if t is None else np.asarray(t, dtype=float)
        tops = self._top_values(radius, tt[-1], svp)
        g = self.gint64 if self.gint64 is not None else np.zeros((self.n, self.n), np.int64)
        nbins = bound_int + 1 if mode == MODE_HIST else 1
        if nbins > _MAX_HIST_BINS:
            raise ValueError("histogram too large; rescale the Gram matrix")

        def shard(top):
            vecs = np.zeros((capacity, self.n), np.int64)
            norms = np.zeros(capacity, np.float64 if mode == MODE_FLOAT else np.int64)
            hist = np.zeros(nbins, np.int64)
            cnt = enum_shard(self.mu, self.d, radius, tt, svp, top, g, bound_int, mode, vecs, norms, hist)
            return cnt, vecs, norms, hist

        if self.workers > 1 and len(tops) > 1:
            with ThreadPoolExecutor(self.workers) as ex:
                parts = list(ex.map(shard, tops))
        else:
            parts = [shard(top) for top in tops]
        return parts

    def _to_input_basis(self, coeffs: np.ndarray) -> List[Tuple[int, ...]]:
        if not len(coeffs):
            return []
        t = np.array(self.transform, dtype=object)
        out = (np.asarray(coeffs, dtype=object) @ t).tolist()
        res = []
        for v in out:
            v = [int(a) for a in v]
            first = next(a for a in v if a)
            if first < 0:
                v = [-a for a in v]
            res.append(tuple(v))
        return res

    def exact_norm(self, coeffs) -> Fraction:
        """Norm of ``coeffs`` with respect to the original Gram matrix."""
        g = self.gram
        return sum((g[i][j] * coeffs[i] * coeffs[j] for i in range(self.n) for j in range(self.n)), Fraction(0))

    # -- public ------------------------------------------------------------
    def histogram(self, bound) -> Dict[Fraction, int]:
        """Counts of vectors (both signs) by exact norm, ``0 < norm <= bound``."""
        bound_int = self._scaled_bound(bound)
        if bound_int <= 0:
            return {}
        if not self._fast_ok(bound_int):
            counts: Dict[Fraction, int] = {}
            for _, nrm in self._exact_vectors(bound):
                counts[nrm] = counts.get(nrm, 0) + 2
            return dict(sorted(counts.items()))
        parts = self._run(bound_int, MODE_HIST)
        hist = np.zeros(bound_int + 1, np.int64)
        for _, _, _, h in parts:
            hist += h
        nz = np.nonzero(hist)[0]
        return {Fraction(int(i), self.den): 2 * int(hist[i]) for i in nz}

    def _fast_ok(self, bound_int) -> bool:
        return self.well_conditioned and self._int64_ok(bound_int)

    def _exact_vectors(self, bound) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Float enumeration with slack, exact rational filter in Python."""
        bound = Fraction(bound)
        bound_int = self._scaled_bound(bound)
        if not self.well_conditioned:
            return _exact_enumerate(self.gint, self.exact_d, bound * self.den, self.transform, self.den, self.gram)
        cap = 1024
        while True:
            parts = self._run(bound_int, MODE_FLOAT, capacity=cap)
            total = max(p[0] for p in parts)
            if total <= cap:
                break
            cap = total
        out = []
        for cnt, vecs, _, _ in parts:
            for v in vecs[:cnt]:
                y = [int(a) for a in v]
                nrm = Fraction(sum(self.gint[i][j] * y[i] * y[j] for i in range(self.n) for j in range(self.n)), self.den)
                if 0 < nrm <= bound:
                    out.append((y, nrm))
        coeffs = self._to_input_basis(np.array([y for y, _ in out], dtype=object)) if out else []
        return [(c, nrm) for c, (_, nrm) in zip(coeffs, out)]

    def vectors(self, bound) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Canonical representatives of all vectors with ``0 < norm <= bound``.

        Sorted by norm, then lexicographically by coefficients.
        """
        bound = Fraction(bound)
        if bound <= 0:
            raise ValueError("bound must be positive")
        bound_int = self._scaled_bound(bound)
        if not self._fast_ok(bound_int):
            res = self._exact_vectors(bound)
        else:
            cap = 4096
            while True:
                parts = self._run(bound_int, MODE_COLLECT, capacity=cap)
                biggest = max((p[0] for p in parts), default=0)
                if biggest <= cap:
                    break
                cap = biggest
            raw = []
            norms = []
            for cnt, vecs, nrm, _ in parts:
                raw.append(vecs[:cnt])
                norms.extend(int(a) for a in nrm[:cnt])
            raw = np.concatenate(raw) if raw else np.zeros((0, self.n), np.int64)
            coeffs = self._to_input_basis(raw)
            res = [(c, Fraction(m, self.den)) for c, m in zip(coeffs, norms)]
        res.sort(key=lambda cv: (cv[1], cv[0]))
        return res

    def min_norm(self) -> Fraction:
        """Exact minimum: no vector lies strictly below the smallest reduced diagonal."""
        diag = min(Fraction(self.gint[i][i], self.den) for i in range(self.n))
        h = self.histogram(diag)
        return min(h) if h else diag

    def coset_min(self, target_coeffs: Sequence[Fraction], bound=None) -> Tuple[Fraction, int]:
        """Minimum of ``||v - t||^2`` over the lattice and the number of minimisers.

        ``target_coeffs`` are rational coordinates in the input basis.
        """
        t = [Fraction(a) for a in target_coeffs]
        inv = xl.inverse(self.transform)
        # coordinates with respect to the reduced basis: t = s T  =>  s = t T^-1
        s = [sum((t[i] * inv[i][j] for i in range(self.n)), Fraction(0)) for j in range(self.n)]
        gi = self.gint

        def dist(y):
            e = [y[i] - s[i] for i in range(self.n)]
            return sum((gi[i][j] * e[i] * e[j] for i in range(self.n) for j in range(self.n)), Fraction(0))

        if bound is None:
            rounded = [round(a) for a in s]
            b_int = dist(rounded)
        else:
            b_int = Fraction(bound) * self.den
        if b_int == 0:
            return Fraction(0), 1
        best = None
        count = 0
        tf = np.array([float(a) for a in s])
        cap = 1024
        while True:
            radius = float(b_int) * (1 + SLACK) + 1e-9
            tops = self._top_values(radius, tf[-1], False)
            g = np.zeros((self.n, self.n), np.int64)
            parts = []
            overflow = False
            for top in tops:
                vecs = np.zeros((cap, self.n), np.int64)
                nr = np.zeros(cap)
                cnt = enum_shard(self.mu, self.d, radius, tf, False, top, g, 0, MODE_FLOAT, vecs, nr, np.zeros(1, np.int64))
                if cnt > cap:
                    overflow = True
                    cap = cnt
                    break
                parts.append(vecs[:cnt])
            if not overflow:
                break
        for block in parts:
            for v in block:
                dv = dist([int(a) for a in v])
                if dv > b_int:
                    continue
                if best is None or dv < best:
                    best, count = dv, 1
                elif dv == best:
                    count += 1
        if best is None:
            return None, 0
        return best / self.den, count


def _exact_enumerate(gint, D, bound, transform, den, gram):
    """Pure-rational Fincke-Pohst used when the float factorisation is unreliable."""
    n = len(gint)
    L, _ = xl.ldl(gint)
    out = []
    x = [0] * n

    def rec(k, partial):
        c = -sum((L[i][k] * x[i] for i in range(k + 1, n)), Fraction(0))
        rem = bound - partial
        if rem < 0:
            return
        # |x_k - c|^2 <= rem / D_k
        r2 = rem / D[k]
        lo = math.floor(c - _frac_sqrt_ceil(r2))
        hi = math.ceil(c + _frac_sqrt_ceil(r2))
        for v in range(lo, hi + 1):
            e = v - c
            p = partial + D[k] * e * e
            if p > bound:
                continue
            x[k] = v
            if k == 0:
                if any(x):
                    out.append((list(x), p))
            else:
                rec(k - 1, p)
        x[k] = 0

    rec(n - 1, Fraction(0))
    res = []
    seen = set()
    t = transform
    for y, p in out:
        v = [sum(y[i] * t[i][j] for i in range(n)) for j in range(n)]
        first = next(a for a in v if a)
        if first < 0:
            v = [-a for a in v]
        key = tuple(v)
        if key in seen:
            continue
        seen.add(key)
        res.append((key, p / den))
    return res


def _frac_sqrt_ceil(q: Fraction) -> Fraction:
    # an upper bound for sqrt(q), exact enough for loop limits
    return Fraction(math.isqrt(q.numerator * q.denominator) + 1, q.denominator)


# ---------------------------------------------------------------------------
# functional interface


def short_vectors(gram, bound, workers: int = 1) -> Iterator[Tuple[Tuple[int, ...], Fraction]]:
    """Every nonzero vector of norm ``<= bound``, one per +- pair.

    The canonical sign has a positive first nonzero coefficient.
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    yield from Enumerator(gram, workers).vectors(bound)


def min_norm(gram, workers: int = 1) -> Fraction:
    return Enumerator(gram, workers).min_norm()


def theta_prefix(gram, max_norm, scale_squared=1, workers: int = 1, enumerator: Optional[Enumerator] = None):
    """``[(scaled norm, count), ...]`` for ``0 < scaled norm <= max_norm``."""
    s = Fraction(scale_squared)
    m = Fraction(max_norm)
    if m <= 0:
        return []
    e = enumerator or Enumerator(gram, workers)
    h = e.histogram(m / s)
    return [(k * s, v) for k, v in sorted(h.items())]


def kissing_number(gram, workers: int = 1, enumerator: Optional[Enumerator] = None) -> Tuple[Fraction, int]:
    e = enumerator or Enumerator(gram, workers)
    mn = e.min_norm()
    return mn, e.histogram(mn)[mn]


def second_layer(gram, workers: int = 1, enumerator: Optional[Enumerator] = None) -> Tuple[Fraction, int]:
    """Smallest norm above the minimum and the number of vectors attaining it."""
    e = enumerator or Enumerator(gram, workers)
    mn = e.min_norm()
    b = mn
    while True:
        b = b * 3 / 2
        h = e.histogram(b)
        above = [k for k in h if k > mn]
        if above:
            k = min(above)
            return k, h[k]


def probe_short_vector(gram, bound, rounds: int = 8, seed: int = 0):
    """Look for a vector of norm below ``bound`` without full enumeration.

    Each round LLL-reduces a randomly re-based Gram matrix and inspects the
    reduced basis vectors and their pairwise sums and differences.  Returns
    ``(norm, coeffs)`` for the shortest hit, or ``None``.  A ``None`` result
    is evidence, not proof, that the minimum is at least ``bound``.
    """
    rng = np.random.default_rng(seed)
    gi, den = _int_gram(gram)
    n = len(gi)
    bound = Fraction(bound)
    best = None
    for r in range(rounds):
        u = xl.identity(n)
        if r:
            for _ in range(4 * n):
                i, j = rng.choice(n, 2, replace=False)
                c = int(rng.integers(-2, 3))
                u[i] = [a + c * b for a, b in zip(u[i], u[j])]
        red, t = lll_reduce(xl.matmul(xl.matmul(u, gi), xl.transpose(u)))
        rows = xl.matmul(t, u)
        cands = [(red[i][i], rows[i]) for i in range(n)]
        for i in range(n):
            for j in range(i):
                for s in (1, -1):
                    cands.append((red[i][i] + red[j][j] + 2 * s * red[i][j],
                                  [a + s * b for a, b in zip(rows[i], rows[j])]))
        for nm, c in cands:
            nm = Fraction(nm, den)
            if 0 < nm < bound and (best is None or nm < best[0]):
                best = (nm, tuple(c))
    return best


def realize_gram(gram, target, enumerator: Optional[Enumerator] = None, max_nodes: int = 10 ** 6):
    """Vectors of the lattice with Gram matrix ``gram`` whose inner products are ``target``.

    Backtracking over the short vectors of each required norm, always
    extending the position with the fewest consistent candidates.  Returns
    coefficient rows in the input basis, or ``None`` if no assignment exists
    (or the node budget runs out).
    """
    e = enumerator or Enumerator(gram)
    tg = xl.rat_matrix(target)
    m = len(tg)
    gi, den = _int_gram(e.gram)
    gi = np.array(gi, dtype=np.int64)
    want = [[x * den for x in r] for r in tg]
    if any(x.denominator != 1 for r in want for x in r):
        return None
    want = np.array([[int(x) for x in r] for r in want], dtype=np.int64)
    pool: Dict[int, np.ndarray] = {}
    vs = e.vectors(max(tg[i][i] for i in range(m)))
    for k in sorted({int(want[i][i]) for i in range(m)}):
        rows = [c for c, nm in vs if nm * den == k]
        arr = np.array(rows, dtype=np.int64).reshape(-1, e.n)
        pool[k] = np.concatenate([arr, -arr])
    cand = [pool[int(want[i][i])] for i in range(m)]
    proj = [c @ gi for c in cand]
    nodes = 0

    def search(assigned, masks):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise TimeoutError
        free = [i for i in range(m) if i not in assigned]
        if not free:
            return assigned
        i = min(free, key=lambda j: int(masks[j].sum()))
        for idx in np.flatnonzero(masks[i]):
            x = cand[i][idx]
            nxt = dict(masks)
            ok = True
            for j in free:
                if j == i:
                    continue
                nxt[j] = masks[j] & (proj[j] @ x == want[j][i])
                if not nxt[j].any():
                    ok = False
                    break
            if ok:
                got = search({**assigned, i: x}, nxt)
                if got is not None:
                    return got
        return None

    masks = {i: np.ones(len(cand[i]), dtype=bool) for i in range(m)}
    try:
        got = search({}, masks)
    except TimeoutError:
        return None
    if got is None:
        return None
    return [tuple(int(a) for a in got[i]) for i in range(m)]


def coset_min_norm(gram, offset_coeffs, bound=None, workers: int = 1) -> Fraction:
    """``min ||t - v||^2`` over lattice vectors ``v``; ``t`` in basis coordinates."""
    m, _ = Enumerator(gram, workers).coset_min(offset_coeffs, bound)
    return m


def report(gram, theta_max=None, scale_squared=1, second: bool = False, workers: int = 1) -> ShortVectorReport:
    e = Enumerator(gram, workers)
    mn, kiss = kissing_number(gram, enumerator=e)
    rep = ShortVectorReport(mn, kiss)
    if second:
        rep.second_layer_norm, rep.second_layer_count = second_layer(gram, enumerator=e)
    if theta_max is not None:
        rep.theta_prefix = theta_prefix(gram, theta_max, scale_squared, enumerator=e)
        rep.bound = Fraction(theta_max)
    return rep
