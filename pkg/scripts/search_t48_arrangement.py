"""Search for a binary Golay arrangement that passes the dimension-48 support conditions.

The ternary code is two copies of the [12,6,6] Golay code on the halves
{0..11} and {12..23}.  The binary Golay code is built as the extended
quadratic-residue code of length 23 and a dodecad and its complement are
moved onto the two halves.

Condition 1 only sees the 132 hexads of each half and condition 3 only sees
pairs of them, so a permutation of a half matters only through the image of
the ternary hexad system.  The script samples permutations until the set of
admissible images stops growing on each half, then tests every pair of
images against condition 3.

Writes ``src/ternlat/data/t48_arrangement.json`` and the binary code file.

    python3 scripts/search_t48_arrangement.py --seed 1
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from ternlat import codes
from ternlat.catalog import DATA_DIR, ternary_golay_12

QR23 = {(i * i) % 23 for i in range(1, 23)}


def qr_golay_24():
    """Extended quadratic-residue [24,12,8] code, coordinate 23 is the parity bit."""
    base = [1 if i in QR23 else 0 for i in range(23)]
    rows = []
    for s in range(23):
        r = [base[(i - s) % 23] for i in range(23)]
        rows.append(r + [sum(r) % 2])
    c = codes.code_from_generator(2, rows)
    if c.k != 12 or codes.min_distance(c) != 8:
        raise RuntimeError("quadratic residue construction did not give the Golay code")
    return c


def half_hexads(words, lo):
    """Six-point supports of ``words`` inside the half starting at ``lo``, as 12-bit masks."""
    out = set()
    for w in words:
        s = [i - lo for i in np.nonzero(w)[0] if lo <= i < lo + 12]
        if len(s) == 6:
            out.add(sum(1 << i for i in s))
    return out


def apply(mask, sigma):
    return sum(1 << sigma[i] for i in range(12) if mask >> i & 1)


def admissible_images(rng, tern_hexads, bin_hexads, patience):
    """Map each condition-1 image of the ternary hexad system to one permutation realizing it.

    ``sigma`` sends a ternary position ``i`` to ``sigma[i]``.
    """
    found = {}
    idle = 0
    while idle < patience:
        sigma = rng.permutation(12)
        image = frozenset(apply(m, sigma) for m in tern_hexads)
        idle += 1
        if image in found or image & bin_hexads:
            continue
        found[image] = sigma
        idle = 0
    return found


def bad_pairs(words):
    """(left, right) 6-set pairs whose union is a binary dodecad or a union of two octads."""
    lo, hi = (1 << 12) - 1, ((1 << 12) - 1) << 12
    masks = [sum(1 << int(i) for i in np.nonzero(w)[0]) for w in words]
    octads = [m for m in masks if m.bit_count() == 8]
    twelve = {m for m in masks if m.bit_count() == 12}
    for i, a in enumerate(octads):
        for b in octads[i + 1:]:
            if (a & b).bit_count() == 4:
                twelve.add(a | b)
    out = set()
    for m in twelve:
        if (m & lo).bit_count() == 6:
            out.add((m & lo, (m & hi) >> 12))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--patience", type=int, default=40000,
                    help="stop sampling a half after this many draws without a new image")
    ap.add_argument("--out", type=Path, default=DATA_DIR / "t48_arrangement.json")
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)

    gol = qr_golay_24()
    words = gol.codewords()
    wt = (words != 0).sum(axis=1)
    dodecad = next(w for w in words[wt == 12])
    left = [int(i) for i in np.nonzero(dodecad)[0]]
    right = [i for i in range(24) if i not in left]
    start = left + right
    arranged = codes.permute(gol, start)
    aw = arranged.codewords()
    octads = aw[(aw != 0).sum(axis=1) == 8]

    g12 = ternary_golay_12()
    tw = g12.codewords()
    t_hex = {sum(1 << int(i) for i in np.nonzero(w)[0]) for w in tw[(tw != 0).sum(axis=1) == 6]}

    halves = []
    for lo in (0, 12):
        imgs = admissible_images(rng, t_hex, half_hexads(octads, lo), args.patience)
        print(f"half {lo // 12}: {len(imgs)} admissible hexad images", file=sys.stderr)
        halves.append(imgs)

    bad = bad_pairs(aw)
    partners = {}
    for a, b in bad:
        partners.setdefault(a, set()).add(b)
    print(f"{len(bad)} forbidden (6,6) supports", file=sys.stderr)

    ternary = codes.direct_sum(g12, g12)
    exempt = [tuple(range(12)), tuple(range(12, 24))]
    best = None
    for img_l, s_left in halves[0].items():
        rows = [partners[a] for a in img_l if a in partners]
        for img_r, s_right in halves[1].items():
            hits = sum(len(r & img_r) for r in rows)
            if best is None or hits < best[0]:
                best = (hits, s_left, s_right)
            if not hits:
                break
        if best[0] == 0:
            break

    hits, s_left, s_right = best
    # ternary position j sits where the arranged binary coordinate sigma[j] goes
    perm = [start[int(s_left[j])] for j in range(12)] + [start[12 + int(s_right[j])] for j in range(12)]
    cand = codes.permute(gol, perm)
    found = codes.support_conditions_48(ternary, cand, exempt=exempt, limit=100000)
    if len({t for _, t, _ in found}) != hits or any(c != 3 for c, _, _ in found):
        raise RuntimeError("pair filter and full support check disagree")
    codes.write_code(gol, DATA_DIR / "codes" / "golay24_binary.txt",
                     rows=[list(map(int, r)) for r in gol.generator])
    args.out.write_text(json.dumps({
        "binary_code": "codes/golay24_binary.txt",
        "arrangement": perm,
        "seed": args.seed,
        "condition_3_violations": hits,
    }, indent=1) + "\n")
    print(f"wrote {args.out} ({hits} condition-3 violations)")
    return 0 if hits == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
