"""Brute-force box enumeration used as an independent oracle."""

import itertools
import math
from fractions import Fraction

import numpy as np

from ternlat import exact_linalg as xl


def box_vectors(gram, bound):
    """Every nonzero ``x`` with ``x G x^t <= bound``, one per +- pair, as ``{x: norm}``.

    Coordinates are bounded by ``sqrt(bound * (G^-1)_ii)``; the whole box is
    scanned with integer arithmetic.
    """
    g = xl.rat_matrix(gram)
    n = len(g)
    inv = xl.inverse(g)
    bound = Fraction(bound)
    r = [math.isqrt(int(bound * inv[i][i]) + 1) + 1 for i in range(n)]
    den = xl.common_denominator(g)
    gi = np.array([[int(x * den) for x in row] for row in g], dtype=np.int64)
    top = int(bound * den)
    axes = [np.arange(-k, k + 1, dtype=np.int64) for k in r]
    out = {}
    head, tail = axes[:1], axes[1:]
    tail_pts = np.array(list(itertools.product(*tail)), dtype=np.int64).reshape(-1, n - 1) if tail \
        else np.zeros((1, 0), dtype=np.int64)
    for a in head[0]:
        x = np.hstack([np.full((len(tail_pts), 1), a, dtype=np.int64), tail_pts])
        norms = np.einsum("ij,jk,ik->i", x, gi, x)
        for v, nm in zip(x[norms <= top], norms[norms <= top]):
            nz = v[np.nonzero(v)[0]]
            if len(nz) and nz[0] > 0:
                out[tuple(int(t) for t in v)] = Fraction(int(nm), den)
    return out


def random_gram(rng, n, spread=3):
    """``B^t B + D`` with small integer ``B`` and a positive diagonal ``D``."""
    b = [[int(rng.integers(-spread, spread + 1)) for _ in range(n)] for _ in range(n)]
    g = xl.matmul(xl.transpose(b), b)
    for i in range(n):
        g[i][i] += int(rng.integers(1, 4))
    return g
