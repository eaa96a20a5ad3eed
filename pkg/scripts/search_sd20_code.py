"""Random search for a self-dual ternary [20,10,6] code.

Each trial grows a self-orthogonal code one row at a time: a random vector of
the current dual whose weight is a multiple of 3 and at least 6 is kept if it
raises the rank.  Ten rows give a self-dual code; the trial succeeds when the
code has no words of weight 3.

    python3 scripts/search_sd20_code.py --seed 7 -o src/ternlat/data/external/sd20_6.txt
"""

import argparse
import sys

import numpy as np

from ternlat import exact_linalg as xl
from ternlat.codes import code_from_generator, weight_distribution, write_code

N = 20


def grow(rng, draws=200):
    while True:
        v = rng.integers(0, 3, N)
        if (v != 0).sum() in (6, 9):
            rows = [v.tolist()]
            break
    while len(rows) < N // 2:
        null = np.array(xl.nullspace_mod_p(rows, 3, N))
        for _ in range(draws):
            v = (rng.integers(0, 3, len(null)) @ null) % 3
            if (v != 0).sum() >= 6 and (v * v).sum() % 3 == 0:
                _, r = xl.rref_mod_p(rows + [v.tolist()], 3)
                if r > len(rows):
                    rows.append(v.tolist())
                    break
        else:
            return None
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("-o", "--out", default="-")
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    for trial in range(args.trials):
        rows = grow(rng)
        if rows is None:
            continue
        c = code_from_generator(3, rows)
        wd = weight_distribution(c)
        if wd[3]:
            continue
        print(f"trial {trial}: A6..A18 = {[wd[w] for w in (6, 9, 12, 15, 18)]}", file=sys.stderr)
        header = "self-dual [20,10,6] ternary code found by random search (scripts/search_sd20_code.py)"
        if args.out == "-":
            print(f"# {header}\n3 {N} {N // 2}")
            for r in rows:
                print(" ".join(map(str, r)))
        else:
            write_code(c, args.out, rows=rows, comment=header)
        return 0
    print("no code found", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
