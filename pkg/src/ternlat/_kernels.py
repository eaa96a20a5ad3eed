"""numba kernels for Schnorr-Euchner enumeration.

Everything here works on a fixed value of the last coefficient (one shard).
Norms are computed in floating point to prune the tree, then recomputed
exactly in int64 against an integer Gram before anything is counted.
"""

import numpy as np
from numba import njit

MODE_HIST = 0
MODE_COLLECT = 1
MODE_FLOAT = 2


@njit(cache=True, nogil=True)
def _exact_norm(G, x):
    n = x.shape[0]
    s = 0
    for i in range(n):
        xi = x[i]
        if xi == 0:
            continue
        r = 0
        for j in range(n):
            r += G[i, j] * x[j]
        s += xi * r
    return s


@njit(cache=True, nogil=True)
def enum_shard(mu, d, radius, t, svp, top, G, bound_int, mode, out_vecs, out_norms, hist):
    """Enumerate one shard; returns the number of accepted vectors.

    ``mu`` is the unit lower-triangular LDL factor and ``d`` its diagonal.
    ``t`` is the target in coefficient coordinates (zero for SVP).  With
    ``svp`` set, only the canonical member of each +-pair is visited and the
    zero vector is skipped.  Vectors beyond ``out_vecs`` capacity are counted
    but not stored.
    """
    n = d.shape[0]
    cap = out_vecs.shape[0]
    x = np.zeros(n, np.int64)
    c = np.zeros(n)
    l = np.zeros(n + 1)
    dx = np.zeros(n, np.int64)
    ddx = np.zeros(n, np.int64)
    mono = np.zeros(n, np.bool_)
    tz = np.zeros(n + 1, np.bool_)
    found = 0

    k = n - 1
    x[k] = top
    c[k] = t[k]
    diff = top - c[k]
    l[k] = d[k] * diff * diff
    if l[k] > radius:
        return 0
    tz[k] = True

    while True:
        if k == 0:
            zero = svp and tz[0] and x[0] == 0
            if not zero:
                if mode == MODE_FLOAT:
                    if found < cap:
                        for i in range(n):
                            out_vecs[found, i] = x[i]
                        out_norms[found] = l[0]
                    found += 1
                else:
                    s = _exact_norm(G, x)
                    if s <= bound_int:
                        if mode == MODE_HIST:
                            hist[s] += 1
                        elif found < cap:
                            for i in range(n):
                                out_vecs[found, i] = x[i]
                            out_norms[found] = s
                        found += 1
            if n == 1:
                return found
            # next sibling at the leaf
            if mono[0]:
                x[0] += 1
            else:
                x[0] += dx[0]
                ddx[0] = -ddx[0]
                dx[0] = ddx[0] - dx[0]
            diff = x[0] - c[0]
            l[0] = l[1] + d[0] * diff * diff
            if l[0] <= radius:
                continue
        else:
            # descend one level
            k -= 1
            tz[k] = tz[k + 1] and x[k + 1] == 0
            s = t[k]
            for i in range(k + 1, n):
                s -= mu[i, k] * (x[i] - t[i])
            c[k] = s
            if svp and tz[k]:
                x[k] = 0
                mono[k] = True
            else:
                xr = np.floor(s + 0.5)
                x[k] = np.int64(xr)
                mono[k] = False
                if s >= xr:
                    dx[k] = 1
                    ddx[k] = 1
                else:
                    dx[k] = -1
                    ddx[k] = -1
            diff = x[k] - c[k]
            l[k] = l[k + 1] + d[k] * diff * diff
            if l[k] <= radius:
                continue
        # climb until a level has a next sibling inside the radius
        while True:
            k += 1
            if k >= n - 1:
                return found
            if mono[k]:
                x[k] += 1
            else:
                x[k] += dx[k]
                ddx[k] = -ddx[k]
                dx[k] = ddx[k] - dx[k]
            diff = x[k] - c[k]
            l[k] = l[k + 1] + d[k] * diff * diff
            if l[k] <= radius:
                break
