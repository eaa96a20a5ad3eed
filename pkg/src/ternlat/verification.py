"""Turn catalog expectations into pass/fail reports.

Claims are grouped in four depth tiers.  ``structural`` needs only exact
linear algebra; ``shallow`` adds the minimum norm and the center density;
``deep`` adds the kissing number and the theta prefix; ``extended`` adds the
second layer and the heavy enumerations (kissing at rank above
:data:`DEEP_KISSING_MAX_RANK`, fingerprint comparisons).

Every comparison is exact.  The center density is always recomputed from the
report's own determinant and minimum, never copied from the expectation.
"""

from __future__ import annotations

import json
import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from . import catalog
from .enumeration import Enumerator
from .lattice import (
    WeightedLattice,
    center_density_squared,
    det_gram,
    gram,
    is_even_integral,
    is_unimodular,
)

DEPTHS = ("structural", "shallow", "deep", "extended")
# kissing numbers above this rank are extended-only (dim 26 and up is slow)
DEEP_KISSING_MAX_RANK = 24
# above this rank the minimum is checked by a bounded search below the claim
FULL_MIN_MAX_RANK = 40
THETA_MAX_RANK = 26

PASS, FAIL, SKIPPED, UNRESOLVED = "pass", "fail", "skipped", "unresolved"

TIER = {
    "rank": 0, "det_gram": 0, "det_scaled": 0, "integral": 0, "even": 0, "unimodular": 0,
    "unimodular_at": 0,
    "min_norm": 1, "center_density_squared": 1,
    "kissing": 2, "theta": 2,
    "second_layer": 3, "distinct_from": 3,
}
ORDER = sorted(TIER, key=lambda k: TIER[k])


@dataclass
class ClaimResult:
    claim: str
    expected: object
    computed: object
    status: str
    source: str = ""
    elapsed: float = 0.0
    note: str = ""


@dataclass
class VerificationReport:
    entry: str
    depth: str
    claims: List[ClaimResult] = field(default_factory=list)
    build_error: str = ""
    build_time: float = 0.0

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.claims)

    def to_dict(self) -> dict:
        return {
            "entry": self.entry,
            "depth": self.depth,
            "build_error": self.build_error,
            "build_time": round(self.build_time, 3),
            "claims": [
                {**asdict(c), "expected": _plain(c.expected), "computed": _plain(c.computed),
                 "elapsed": round(c.elapsed, 3)}
                for c in self.claims
            ],
        }


def _plain(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(_plain(k)): _plain(x) for k, x in v.items()}
    return v


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class Fingerprint:
    """Rank, scaled Gram determinant and theta prefix.

    Different fingerprints prove two lattices are not isometric; equal ones
    prove nothing.
    """

    rank: int
    det_gram: Fraction
    theta_prefix: tuple
    max_norm: Fraction


def fingerprint(l: WeightedLattice, scale_squared=None, max_norm=12, workers: int = 1) -> Fingerprint:
    s = Fraction(l.scale_squared if scale_squared is None else scale_squared)
    g = gram(l)
    det = det_gram(l) * s ** l.rank
    e = Enumerator(g, workers)
    m = Fraction(max_norm)
    theta = tuple(sorted((k * s, v) for k, v in e.histogram(m / s).items())) if m > 0 else ()
    return Fingerprint(l.rank, det, theta, m)


def compare_fingerprints(a: Fingerprint, b: Fingerprint) -> str:
    """``"different"`` when the data certify non-isometry, else ``"inconclusive"``."""
    if a.rank != b.rank or a.det_gram != b.det_gram:
        return "different"
    m = min(a.max_norm, b.max_norm)
    ta = tuple(t for t in a.theta_prefix if t[0] <= m)
    tb = tuple(t for t in b.theta_prefix if t[0] <= m)
    return "different" if ta != tb else "inconclusive"


# ---------------------------------------------------------------------------
# claim evaluation


class _Context:
    """Per-entry state shared by successive claims."""

    def __init__(self, built: catalog.Built, entry: catalog.CatalogEntry, workers: int):
        self.built = built
        self.entry = entry
        self.lattice = built.lattice
        self.scale = entry.report_scale
        self.workers = workers
        self.cache: Dict[str, object] = {}
        self._enum: Optional[Enumerator] = None

    @property
    def gram(self):
        if "gram" not in self.cache:
            self.cache["gram"] = gram(self.lattice)
        return self.cache["gram"]

    @property
    def enum(self) -> Enumerator:
        if self._enum is None:
            self._enum = Enumerator(self.gram, self.workers)
        return self._enum

    def det(self) -> Fraction:
        if "det" not in self.cache:
            self.cache["det"] = det_gram(self.lattice)
        return self.cache["det"]

    def minimum(self) -> Fraction:
        if "min" not in self.cache:
            self.cache["min"] = self.enum.min_norm()
        return self.cache["min"]


def _c_rank(ctx, exp):
    return ctx.lattice.rank


def _c_det(ctx, exp):
    return ctx.det()


def _c_det_scaled(ctx, exp):
    return ctx.det() * ctx.scale ** ctx.lattice.rank


def _c_integral(ctx, exp):
    return is_even_integral(ctx.lattice, ctx.scale)[0]


def _c_even(ctx, exp):
    return is_even_integral(ctx.lattice, ctx.scale)[1]


def _c_unimodular(ctx, exp):
    return is_unimodular(ctx.lattice, ctx.scale)


def _c_unimodular_at(ctx, exp):
    # the claim holds when the lattice is integral with determinant 1 at ``exp``
    return exp if is_unimodular(ctx.lattice, exp) else None


def _c_min(ctx, exp):
    if ctx.lattice.rank <= FULL_MIN_MAX_RANK or exp is None:
        return ctx.minimum()
    return _bounded_min(ctx, exp)


def _bounded_min(ctx, exp):
    """Minimum when it is at least ``exp``, else the norm of some shorter vector.

    A randomized LLL probe runs first; otherwise only vectors below ``exp``
    are enumerated, and equality is certified by a reduced basis vector of
    norm ``exp``.
    """
    from .enumeration import probe_short_vector

    hit = probe_short_vector(ctx.gram, exp)
    if hit:
        return hit[0]
    e = ctx.enum
    below = list(e.histogram(exp - Fraction(1, e.den)))
    if below:
        ctx.cache["min"] = min(below)
        return min(below)
    diag = min(Fraction(e.gint[i][i], e.den) for i in range(e.n))
    if diag == exp:
        ctx.cache["min"] = exp
        return exp
    return ctx.minimum()


def _c_density(ctx, exp):
    return center_density_squared(ctx.lattice, ctx.minimum(), ctx.det())


def _c_kissing(ctx, exp):
    mn = ctx.minimum()
    return ctx.enum.histogram(mn)[mn]


def _c_theta(ctx, exp):
    top = max(n for n, _ in exp) if exp else Fraction(0)
    if top <= 0:
        return ()
    h = ctx.enum.histogram(top / ctx.scale)
    return tuple(sorted((k * ctx.scale, v) for k, v in h.items()))


def _c_second(ctx, exp):
    from .enumeration import second_layer

    return second_layer(ctx.gram, enumerator=ctx.enum)


def _c_distinct(ctx, exp):
    other = catalog.build(exp)
    mn = ctx.entry.claim("min_norm")
    top = mn.value * ctx.scale if mn else Fraction(12)
    a = fingerprint(ctx.lattice, ctx.scale, max_norm=top, workers=ctx.workers)
    b = fingerprint(other.lattice, ctx.scale, max_norm=top, workers=ctx.workers)
    return compare_fingerprints(a, b)


EVALUATORS: Dict[str, Callable] = {
    "rank": _c_rank,
    "det_gram": _c_det,
    "det_scaled": _c_det_scaled,
    "integral": _c_integral,
    "even": _c_even,
    "unimodular": _c_unimodular,
    "unimodular_at": _c_unimodular_at,
    "min_norm": _c_min,
    "center_density_squared": _c_density,
    "kissing": _c_kissing,
    "theta": _c_theta,
    "second_layer": _c_second,
    "distinct_from": _c_distinct,
}


def _judge(key, expected, computed) -> str:
    if key == "distinct_from":
        return PASS if computed == "different" else UNRESOLVED
    if key == "theta":
        return PASS if tuple(expected) == tuple(computed) else FAIL
    if key == "second_layer" and isinstance(expected, int):
        return PASS if computed[1] == expected else FAIL
    return PASS if expected == computed else FAIL


def _tier_allows(key: str, depth: str, rank: int) -> Optional[str]:
    """``None`` when the claim runs at ``depth``, else the reason it is skipped."""
    level = DEPTHS.index(depth)
    need = TIER[key]
    if key == "kissing" and rank > DEEP_KISSING_MAX_RANK:
        need = 3
    if key == "theta" and rank > THETA_MAX_RANK:
        need = 3
    if level < need:
        return f"needs depth {DEPTHS[need]}"
    return None


def _child(conn, fn, ctx, exp):
    try:
        value = fn(ctx, exp)
        conn.send(("ok", value, ctx.cache.get("min")))
    except BaseException as e:  # pragma: no cover - reported to the parent
        conn.send(("err", f"{type(e).__name__}: {e}", None))
    finally:
        conn.close()


def _run_with_timeout(fn, ctx, exp, timeout):
    """Evaluate ``fn`` in a forked child; ``(ok, value)`` or ``(False, reason)``."""
    if timeout is None or mp.current_process().daemon:
        return True, fn(ctx, exp)
    c = mp.get_context("fork")
    parent, child = c.Pipe(duplex=False)
    p = c.Process(target=_child, args=(child, fn, ctx, exp))
    p.start()
    child.close()
    if parent.poll(timeout):
        status, value, mn = parent.recv()
        p.join()
        if status == "err":
            raise RuntimeError(value)
        if mn is not None:
            ctx.cache["min"] = mn
        return True, value
    p.kill()
    p.join()
    return False, f"timed out after {timeout}s"


def verify(name: str, depth: str = "deep", workers: int = 1, timeout: Optional[float] = None,
           code_files: Optional[Dict[str, str]] = None, claims: Optional[Sequence[str]] = None,
           progress: Optional[Callable[[str], None]] = None) -> VerificationReport:
    """Check every expectation of ``name`` allowed at ``depth``.

    Raises :class:`catalog.CatalogError` for unknown names.  A builder failure
    is recorded in ``build_error``; missing external code data skips every
    claim.
    """
    if depth not in DEPTHS:
        raise ValueError(f"depth must be one of {DEPTHS}")
    entry = catalog.entry(name)
    rep = VerificationReport(entry.name, depth)
    t0 = time.perf_counter()
    try:
        built = catalog.build(entry.name, code_files)
    except catalog.MissingCodeData as e:
        rep.build_time = time.perf_counter() - t0
        for key in _ordered(entry, claims):
            c = entry.expected[key]
            rep.claims.append(ClaimResult(key, c.value, None, SKIPPED, c.source, 0.0, str(e)))
        return rep
    except Exception as e:
        rep.build_time = time.perf_counter() - t0
        rep.build_error = f"{type(e).__name__}: {e}"
        return rep
    rep.build_time = time.perf_counter() - t0
    ctx = _Context(built, entry, workers)
    for key in _ordered(entry, claims):
        c = entry.expected[key]
        reason = _tier_allows(key, depth, ctx.lattice.rank)
        if reason:
            rep.claims.append(ClaimResult(key, c.value, None, SKIPPED, c.source, 0.0, reason))
            continue
        if progress:
            progress(f"{entry.name}: {key}")
        t = time.perf_counter()
        ok, value = _run_with_timeout(EVALUATORS[key], ctx, c.value, timeout if TIER[key] else None)
        dt = time.perf_counter() - t
        if not ok:
            rep.claims.append(ClaimResult(key, c.value, None, SKIPPED, c.source, dt, value))
            continue
        rep.claims.append(ClaimResult(key, c.value, value, _judge(key, c.value, value), c.source, dt))
    return rep


def _ordered(entry: catalog.CatalogEntry, claims) -> List[str]:
    keys = [k for k in ORDER if k in entry.expected]
    if claims is not None:
        keys = [k for k in keys if k in claims]
    return keys


def default_depth(rank: int) -> str:
    if rank <= 26:
        return "deep"
    if rank <= 32:
        return "shallow"
    return "structural"


def _verify_star(args):
    name, depth, timeout, code_files = args
    return verify(name, depth or default_depth(catalog.entry(name).dim), 1, timeout, code_files)


def run_all(depth: Optional[str] = None, filter: Optional[str] = None, workers: int = 1,
            timeout: Optional[float] = None, code_files: Optional[Dict[str, str]] = None,
            progress: Optional[Callable[[str], None]] = None) -> List[VerificationReport]:
    """Verify every entry matching ``filter``; ``depth=None`` picks by rank."""
    names = [e.name for e in catalog.filter_entries(filter)]
    jobs = [(n, depth, timeout, code_files) for n in names]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers, mp_context=mp.get_context("fork")) as ex:
            out = []
            for n, rep in zip(names, ex.map(_verify_star, jobs)):
                if progress:
                    progress(f"done {n}")
                out.append(rep)
            return out
    out = []
    for job in jobs:
        if progress:
            progress(f"verifying {job[0]}")
        out.append(_verify_star(job))
    return out


def exit_code(reports: Sequence[VerificationReport]) -> int:
    if any(r.build_error for r in reports):
        return 2
    return 1 if any(r.failed for r in reports) else 0


# ---------------------------------------------------------------------------
# output


def reports_json(reports: Sequence[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=1)


def _short(v, width=28) -> str:
    if v is None:
        return "-"
    s = json.dumps(_plain(v)) if not isinstance(v, str) else v
    return s if len(s) <= width else s[: width - 3] + "..."


def reports_table(reports: Sequence[VerificationReport]) -> str:
    rows = [("entry", "claim", "expected", "computed", "status", "source", "secs")]
    for r in reports:
        if r.build_error:
            rows.append((r.entry, "build", "-", r.build_error[:40], "error", "", f"{r.build_time:.2f}"))
            continue
        if not r.claims:
            rows.append((r.entry, "-", "-", "-", "none", "", f"{r.build_time:.2f}"))
        for c in r.claims:
            computed = c.note if c.status == SKIPPED else _short(c.computed)
            rows.append((r.entry, c.claim, _short(c.expected), computed, c.status, c.source, f"{c.elapsed:.2f}"))
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(str(x).ljust(w) for x, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
