"""Command-line front end.

Exit codes: 0 success, 1 verification/audit failure, 2 usage or bad input.
JSON goes to stdout (or --out); human-readable tables go to stderr. The
config echoed into each report deliberately omits --jobs, --out and
--no-cache so that reruns with different plumbing stay byte-identical.
"""
from __future__ import annotations

import argparse
import inspect
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .brill_noether import (BNQuery, bn_enumerate, clifford_index,
                            abel_sample, merge_reports, split_ranges)
from .bundles import LineBundle, bundle_from_json, bundle_count
from .cache import JsonlCache, bn_key
from .cohomology import base_locus, h0, h1
from .curve import BinaryCurve, random_curve
from .fields import PrimeField, Rationals, field_to_json
from .picard import enumerate_strata, picard_type, strata_to_json
from .reports import canonical_json, envelope, text_table
from .rng import Rng
from .suites import DEFAULT_SEED, SUITES


def _parse_md(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--md wants 'd1,d2', got {text!r}")
    return (int(parts[0]), int(parts[1]))


def _parse_primes(text: str):
    return tuple(int(t) for t in text.split(",") if t)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bincurve",
        description="Line bundles, cohomology and special divisors on "
                    "two-component nodal curves.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, need_curve=True):
        if need_curve:
            p.add_argument("--curve", help="curve JSON file")
            p.add_argument("--random-genus", type=int, metavar="G",
                           help="seeded random curve instead of a file")
        p.add_argument("--p", type=int, help="prime field F_p")
        p.add_argument("--field", choices=["Q"], help="rationals")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--out", help="write JSON report here, not stdout")

    p = sub.add_parser("h0", help="h0/h1 and base locus of one bundle")
    add_common(p)
    p.add_argument("--md", type=_parse_md)
    p.add_argument("--bundle", help="bundle JSON file (md + gluing)")

    p = sub.add_parser("strata", help="stratify degree-d compactified Picard")
    add_common(p)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--g", type=int, help="restrict to one genus")
    p.add_argument("--p", type=int, help="restrict to one prime")
    p.add_argument("--n", type=int, help="sample size override")
    p.add_argument("--trials", type=int)
    p.add_argument("--primes", type=_parse_primes)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("clifford", help="Clifford index by exhaustive scan")
    add_common(p)

    p = sub.add_parser("bn", help="count/list W^r_md classes")
    add_common(p)
    p.add_argument("--md", type=_parse_md, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--witness-cap", type=int, default=64)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--audit", action="store_true",
                   help="recompute on cache hit and compare")

    p = sub.add_parser("abel", help="sample degree-d point classes")
    add_common(p)
    p.add_argument("--md", type=_parse_md, required=True)
    p.add_argument("--trials", type=int, default=200)
    return ap


def _field_from_args(args):
    if getattr(args, "field", None) == "Q":
        return Rationals()
    if getattr(args, "p", None) is not None:
        return PrimeField(args.p)
    return None


def _load_curve(args) -> BinaryCurve:
    if getattr(args, "curve", None):
        with open(args.curve, encoding="utf-8") as fh:
            return BinaryCurve.from_json(json.load(fh))
    if getattr(args, "random_genus", None) is not None:
        ctx = _field_from_args(args)
        if ctx is None:
            raise ValueError("--random-genus needs --p or --field")
        return random_curve(args.random_genus, ctx, Rng(args.seed))
    raise ValueError("provide --curve FILE or --random-genus G")


def _curve_config(args, X: BinaryCurve) -> dict:
    src = {"file": args.curve} if getattr(args, "curve", None) else \
        {"random_genus": args.random_genus, "seed": args.seed}
    return {"curve": src, "field": field_to_json(X.ctx)}


def _emit(obj: dict, out: str | None, table: str | None = None) -> None:
    text = canonical_json(obj) + "\n"
    if table:
        print(table, file=sys.stderr)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_h0(args) -> int:
    X = _load_curve(args)
    if args.bundle:
        with open(args.bundle, encoding="utf-8") as fh:
            L = bundle_from_json(X, json.load(fh))
    elif args.md is not None:
        ones = [X.ctx.one] * (X.genus + 1)
        L = LineBundle(X, args.md, ones)
    else:
        raise ValueError("provide --bundle FILE or --md d1,d2")
    n0, n1 = h0(L), h1(L)
    locus = None
    if n0 >= 1:
        bl = base_locus(L)
        locus = {
            "smooth_points": [[comp, X.ctx.fmt(v) if v is not None else "inf"]
                              for comp, v in _locus_points(bl, X)],
            "nodes": list(bl.nodes),
            "full_components": list(bl.full_components),
        }
    payload = {"md": list(L.md),
               "c": [X.ctx.to_pair(x) for x in L.c],
               "h0": n0, "h1": n1, "base_locus": locus}
    cfg = {**_curve_config(args, X), "md": list(L.md)}
    _emit(envelope("h0", "section-space dimensions", cfg, payload), args.out)
    return 0


def _locus_points(bl, X):
    # base_locus reports projective points; flatten for JSON
    out = []
    for comp, pt in bl.smooth_points:
        out.append((comp, None if pt.is_infinity() else pt.a))
    return out


def cmd_strata(args) -> int:
    X = _load_curve(args)
    strata = enumerate_strata(X, args.d)
    payload = {"d": args.d, "genus": X.genus,
               "picard_type": picard_type(args.d, X.genus),
               "strata": strata_to_json(strata)}
    rows = []
    for item in payload["strata"]:
        if item.get("ell0"):
            rows.append(("ell0", "-", "-", "-"))
        else:
            rows.append((",".join(map(str, item["S"])) or "-",
                         f"({item['md'][0]},{item['md'][1]})",
                         item["dim"], "strict" if item["strict"] else "full"))
    table = text_table(("S", "md", "dim", "kind"), rows)
    cfg = {**_curve_config(args, X), "d": args.d}
    _emit(envelope("strata", "compactified-Picard strata", cfg, payload),
          args.out, table)
    return 0


def cmd_verify(args) -> int:
    fn = SUITES[args.suite]
    accepted = inspect.signature(fn).parameters
    kwargs = {"seed": args.seed, "jobs": args.jobs}
    overrides = {"gs": (args.g,) if args.g is not None else None,
                 "ps": (args.p,) if args.p is not None else None,
                 "g": args.g, "p": args.p,
                 "n_curves": args.n, "n_random": args.n,
                 "trials": args.trials, "primes": args.primes,
                 "exhaustive": args.exhaustive or None}
    for k, v in overrides.items():
        if v is not None and k in accepted:
            kwargs[k] = v
    kwargs = {k: v for k, v in kwargs.items() if k in accepted}
    res = fn(**kwargs)
    cfg = dict(res.config)
    table = text_table(("suite", "passed"),
                       [(res.name, "yes" if res.passed else "NO")])
    _emit(envelope("verify", res.name, cfg, res.to_json()), args.out, table)
    return 0 if res.passed else 1


def cmd_clifford(args) -> int:
    X = _load_curve(args)
    rep = clifford_index(X)
    cfg = _curve_config(args, X)
    _emit(envelope("clifford", "clifford index over F_p", cfg, rep.to_json()),
          args.out)
    return 0


def _bn_shard(blob):
    curve_json, md, r, lo, hi, cap = blob
    X = BinaryCurve.from_json(curve_json)
    return bn_enumerate(X, BNQuery(tuple(md), r), witness_cap=cap,
                        index_range=(lo, hi))


def _bn_compute(X: BinaryCurve, q: BNQuery, cap: int, jobs: int):
    if jobs <= 1:
        return bn_enumerate(X, q, witness_cap=cap)
    total = bundle_count(X)
    blobs = [(X.to_json(), list(q.md), q.r, lo, hi, cap)
             for lo, hi in split_ranges(total, jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_bn_shard, blobs))
    return merge_reports(parts)


def cmd_bn(args) -> int:
    X = _load_curve(args)
    q = BNQuery(args.md, args.r)
    cache = None if args.no_cache else JsonlCache()
    key = bn_key(X.to_json(), field_to_json(X.ctx), list(q.md), q.r)
    payload = None
    audit = None
    if cache is not None:
        hit = cache.lookup(key)
        if hit is not None and hit.get("witness_cap") == args.witness_cap:
            payload = hit["report"]
            if args.audit:
                fresh = _bn_compute(X, q, args.witness_cap, args.jobs).to_json()
                match = fresh == payload
                audit = {"checked": True, "match": match}
                if not match:
                    payload = fresh
    if payload is None:
        payload = _bn_compute(X, q, args.witness_cap, args.jobs).to_json()
        if cache is not None:
            cache.store(key, {"witness_cap": args.witness_cap,
                              "report": payload})
    if audit is not None:
        payload = {**payload, "audit": audit}
    cfg = {**_curve_config(args, X), "md": list(q.md), "r": q.r,
           "witness_cap": args.witness_cap, "audit": args.audit}
    table = text_table(("md", "r", "p", "count"),
                       [(f"({q.md[0]},{q.md[1]})", q.r, payload["p"],
                         payload["count"])])
    _emit(envelope("bn", "rational W^r locus", cfg, payload),
          args.out, table)
    if audit is not None and not audit["match"]:
        print("bn: cache entry disagreed with recomputation", file=sys.stderr)
        return 1
    return 0


def cmd_abel(args) -> int:
    X = _load_curve(args)
    stats = abel_sample(X, args.md, Rng(args.seed), args.trials)
    cfg = {**_curve_config(args, X), "md": list(args.md),
           "trials": args.trials, "seed": args.seed}
    _emit(envelope("abel", "point-class sampling", cfg, stats.to_json()),
          args.out)
    return 0


COMMANDS = {"h0": cmd_h0, "strata": cmd_strata, "verify": cmd_verify,
            "clifford": cmd_clifford, "bn": cmd_bn, "abel": cmd_abel}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:       # argparse exits 2 on usage errors
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"bincurve: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
