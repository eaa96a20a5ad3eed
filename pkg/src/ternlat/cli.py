"""``ternlat`` command line: list, build, verify, theta, code.

Exit codes: 0 success, 1 a claim failed, 2 unknown name, missing data or a
builder error.  Progress goes to standard error; standard output carries
only results.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from . import catalog, codes, verification
from .enumeration import Enumerator
from .lattice import dumps, gram


def _err(msg: str) -> None:
    print(f"ternlat: {msg}", file=sys.stderr)


def _code_files(values: Optional[List[str]]) -> Dict[str, str]:
    """``--code-file PATH`` applies to t40; ``--code-file NAME=PATH`` to any entry."""
    out = {}
    for v in values or ():
        name, sep, path = v.partition("=")
        if sep:
            out[catalog.entry(name).name] = path
        else:
            out["t40"] = v
    return out


def _q(n: Fraction) -> str:
    return f"q^{n}" if n.denominator == 1 else f"q^({n})"


def theta_string(series) -> str:
    return " + ".join(["1"] + [f"{c}{_q(n)}" for n, c in series])


# ---------------------------------------------------------------------------


def cmd_list(args) -> int:
    es = catalog.filter_entries(args.filter)
    if args.json:
        out = []
        for e in es:
            out.append({
                "name": e.name,
                "aliases": list(e.aliases),
                "dim": e.dim,
                "ref": e.ref,
                "report_scale": str(e.report_scale),
                "expected": {k: {"value": verification._plain(c.value), "source": c.source}
                             for k, c in e.expected.items()},
            })
        print(json.dumps(out, indent=1))
        return 0
    rows = [("name", "dim", "delta^2", "kissing", "description")]
    for e in es:
        d, k = e.claim("center_density_squared"), e.claim("kissing")
        rows.append((
            e.name + (f" ({', '.join(e.aliases)})" if e.aliases else ""),
            str(e.dim),
            f"{d.value} [{d.source}]" if d else "-",
            f"{k.value} [{k.source}]" if k else "-",
            e.ref,
        ))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    for r in rows:
        print("  ".join(x.ljust(w) for x, w in zip(r[:4], widths)) + "  " + r[4])
    return 0


def cmd_build(args) -> int:
    try:
        built = catalog.build(args.name, _code_files(args.code_file))
    except catalog.MissingCodeData as e:
        _err(str(e))
        return 2
    except catalog.CatalogError:
        _err(f"unknown entry {args.name!r}")
        return 2
    except Exception as e:
        _err(f"build failed: {type(e).__name__}: {e}")
        return 2
    text = dumps(built.lattice)
    if args.output and args.output != "-":
        with open(args.output, "w") as f:
            f.write(text + "\n")
        _err(f"wrote {args.output}")
    else:
        print(text)
    return 0


def cmd_verify(args) -> int:
    progress = (lambda m: print(m, file=sys.stderr, flush=True)) if not args.quiet else None
    files = _code_files(args.code_file)
    if args.all or args.filter:
        reports = verification.run_all(args.depth, args.filter, args.workers, args.timeout, files, progress)
    else:
        if not args.names:
            _err("give entry names, --filter or --all")
            return 2
        reports = []
        for n in args.names:
            try:
                e = catalog.entry(n)
            except catalog.CatalogError:
                _err(f"unknown entry {n!r}")
                return 2
            depth = args.depth or verification.default_depth(e.dim)
            reports.append(verification.verify(e.name, depth, args.workers, args.timeout, files,
                                               progress=progress))
    if args.json:
        print(verification.reports_json(reports))
    else:
        print(verification.reports_table(reports))
    for r in reports:
        if r.build_error:
            _err(f"{r.entry}: {r.build_error}")
    return verification.exit_code(reports)


def cmd_theta(args) -> int:
    try:
        e = catalog.entry(args.name)
        built = catalog.build(e.name, _code_files(args.code_file))
    except catalog.CatalogError:
        _err(f"unknown entry {args.name!r}")
        return 2
    except catalog.MissingCodeData as ex:
        _err(str(ex))
        return 2
    scale = Fraction(args.scale) if args.scale else e.report_scale
    top = Fraction(args.max)
    series = []
    vectors = []
    if top > 0:
        en = Enumerator(gram(built.lattice), args.workers)
        if args.dump_short_vectors:
            vs = en.vectors(top / scale)
            counts: Dict[Fraction, int] = {}
            for c, n in vs:
                counts[n] = counts.get(n, 0) + 2
                vectors.append({"coeffs": list(c), "norm": str(n * scale)})
            series = sorted((n * scale, c) for n, c in counts.items())
        else:
            series = sorted((n * scale, c) for n, c in en.histogram(top / scale).items())
    if args.json:
        out = {"entry": e.name, "scale_squared": str(scale), "max": str(top),
               "theta": [[str(n), c] for n, c in series]}
        if args.dump_short_vectors:
            out["vectors"] = vectors
        print(json.dumps(out, indent=1))
    else:
        print(theta_string(series))
        if args.dump_short_vectors:
            for v in vectors:
                print(v["norm"], " ".join(map(str, v["coeffs"])))
    return 0


def cmd_code(args) -> int:
    if not args.name:
        names = catalog.code_inventory()
        if args.json:
            print(json.dumps(names))
        else:
            print("\n".join(names))
        return 0
    try:
        c = catalog.load_code(args.name)
    except FileNotFoundError:
        try:
            c = codes.read_code(args.name)
        except (FileNotFoundError, ValueError):
            _err(f"unknown code {args.name!r}")
            return 2
    wd = codes.weight_distribution(c)
    dist = {w: a for w, a in enumerate(wd) if a}
    if args.json:
        print(json.dumps({"p": c.p, "n": c.n, "k": c.k, "generator": c.signed_rows(),
                          "min_distance": codes.min_distance(c),
                          "weight_distribution": {str(w): a for w, a in dist.items()}}, indent=1))
    else:
        print(f"[{c.n},{c.k},{codes.min_distance(c)}] over GF({c.p})")
        print(codes.format_matrix(c.signed_rows(), c.p))
        print("weights: " + ", ".join(f"A{w}={a}" for w, a in dist.items()))
    return 0


# ---------------------------------------------------------------------------


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ternlat", description="Lattices from ternary codes, checked exactly.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("list", help="list catalog entries")
    s.add_argument("--filter", help="dim=12, dim<=26 or a name substring")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("build", help="build an entry and write its lattice file")
    s.add_argument("name")
    s.add_argument("-o", "--output", help="output path (default stdout)")
    s.add_argument("--code-file", action="append", help="external code, PATH or NAME=PATH")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify", help="check expected invariants")
    s.add_argument("names", nargs="*")
    s.add_argument("--all", action="store_true")
    s.add_argument("--filter")
    s.add_argument("--depth", choices=verification.DEPTHS,
                   help="default: deep up to rank 26, shallow to 32, structural above")
    s.add_argument("--json", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--timeout", type=float, help="seconds per claim; slower claims are skipped")
    s.add_argument("--code-file", action="append")
    s.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("theta", help="theta series prefix")
    s.add_argument("name")
    s.add_argument("--max", required=True, help="largest scaled norm")
    s.add_argument("--scale", help="squared scale factor (default: the entry's report scale)")
    s.add_argument("--json", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--code-file", action="append")
    s.add_argument("--dump-short-vectors", action="store_true",
                   help="also print one coefficient vector per +- pair")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("code", help="show a bundled code")
    s.add_argument("name", nargs="?", help="code name or file; omit to list the inventory")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_code)
    return p


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    try:
        return args.func(args)
    except catalog.CatalogError as e:
        _err(f"unknown entry {e.args[0]!r}")
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
