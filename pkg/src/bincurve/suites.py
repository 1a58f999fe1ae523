"""Verification suites: each one checks a cluster of statements end to end
and returns a deterministic, JSON-ready result.

Every suite is a pure function of its keyword arguments; all randomness
flows from the seed. Summaries never contain wall-clock data, so reports
are byte-identical across reruns and worker counts.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import cohomology
from .brill_noether import (BNQuery, bn_enumerate, bn_suite, clifford_index,
                            clifford_zero_classification, estimate_dim,
                            martens_bound, predicted_empty,
                            verify_canonical_very_ample)
from .bundles import (LineBundle, canonical_bundle, dual, enumerate_bundles,
                      hyperelliptic_class, tensor, trivial)
from .curve import (BinaryCurve, is_hyperelliptic_fast, normalize_at,
                    random_curve, random_hyperelliptic_curve, standard_curve)
from .fields import PrimeField, Rationals
from .picard import (Ell0, Stratum, balanced_set, closure_leq,
                     enumerate_strata, picard_type)
from .rng import Rng

DEFAULT_SEED = 20260814


@dataclass
class SuiteResult:
    name: str
    passed: bool
    config: dict
    summary: dict

    def to_json(self):
        return {"suite": self.name, "passed": self.passed,
                "config": self.config, "summary": self.summary}


def _suite_curves(g: int, ctx, rng: Rng):
    """Deterministic fixtures: the standard (hyperelliptic) curve plus, for
    g >= 3, one seeded random curve (generically not hyperelliptic)."""
    if g == 0:
        from .curve import ProjPoint
        inf = ProjPoint.infinity(ctx)
        return [BinaryCurve(ctx, [(inf, inf)])]
    curves = [standard_curve(g, ctx)]
    if g >= 3 and (not ctx.is_prime_field() or ctx.p >= g + 3):
        curves.append(random_curve(g, ctx, rng))
    return curves


def suite_riemann(gs=(1, 2, 3), ps=(5, 7), seed=DEFAULT_SEED, jobs=1):
    """h0 = d-g+1 for every balanced class with d >= 2g-1 (grid d <= 2g+2)."""
    rng = Rng(seed)
    checked = 0
    violations = []
    for g in gs:
        for p in ps:
            ctx = PrimeField(p)
            for ci, X in enumerate(_suite_curves(g, ctx, rng.spawn())):
                for d in range(2 * g - 1, 2 * g + 3):
                    for md in balanced_set(d, g):
                        profile = cohomology.gluing_profile(X, md)
                        for L in enumerate_bundles(X, md):
                            n = cohomology.h0(L, profile)
                            checked += 1
                            if n != d - g + 1:
                                violations.append(
                                    {"g": g, "p": p, "curve": ci,
                                     "md": list(md),
                                     "c": [str(x) for x in L.c],
                                     "h0": n, "expected": d - g + 1})
    return SuiteResult(
        "riemann", not violations,
        {"gs": list(gs), "ps": list(ps), "seed": seed},
        {"classes_checked": checked, "violations": violations[:10],
         "n_violations": len(violations)})


def suite_clifford(gs=(1, 2, 3), ps=(5, 7), seed=DEFAULT_SEED, jobs=1,
                   exhaustive=True):
    """h0 <= d/2+1 on 0 <= d <= 2g, with both equality cases pinned to the
    unique expected class; plus index-0 <=> hyperelliptic cross-checks."""
    rng = Rng(seed)
    checked = 0
    problems = []
    for g in gs:
        for p in ps:
            ctx = PrimeField(p)
            for ci, X in enumerate(_suite_curves(g, ctx, rng.spawn())):
                where = {"g": g, "p": p, "curve": ci}
                d0_hits = []
                omega_hits = []
                for d in range(0, 2 * g + 1):
                    for md in balanced_set(d, g):
                        profile = cohomology.gluing_profile(X, md)
                        for L in enumerate_bundles(X, md):
                            n = cohomology.h0(L, profile)
                            checked += 1
                            if 2 * n > d + 2:
                                problems.append({**where, "kind": "bound",
                                                 "md": list(md), "h0": n})
                            if d == 0 and n == 1:
                                d0_hits.append(L)
                            if d == 2 * g - 2 and n == g:
                                omega_hits.append(L)
                if len(d0_hits) != 1 or d0_hits[0] != trivial(X):
                    problems.append({**where, "kind": "degree0-equality",
                                     "n_hits": len(d0_hits)})
                if g >= 1:
                    w = canonical_bundle(X)
                    if len(omega_hits) != 1 or omega_hits[0] != w:
                        problems.append({**where, "kind": "canonical-equality",
                                         "n_hits": len(omega_hits)})
                if g >= 2:
                    hyp, _ = is_hyperelliptic_fast(X)
                    rep = clifford_index(X)
                    if (rep.cliff == 0) != hyp:
                        problems.append({**where, "kind": "index-vs-pencil",
                                         "cliff": rep.cliff, "hyp": hyp})
                    if hyp:
                        for d in range(0, 2 * g - 1, 2):
                            zc = clifford_zero_classification(X, d)
                            if not zc.passed:
                                problems.append({**where,
                                                 "kind": "zero-classification",
                                                 "d": d,
                                                 "n_found": zc.n_found})
    return SuiteResult(
        "clifford", not problems,
        {"gs": list(gs), "ps": list(ps), "seed": seed,
         "exhaustive": bool(exhaustive)},
        {"classes_checked": checked, "problems": problems[:10],
         "n_problems": len(problems)})


def suite_serre(gs=(1, 2, 3), ps=(5, 7), seed=DEFAULT_SEED, jobs=1):
    """h0(w ⊗ L^-1) = h0(L) - d + g - 1 on the full exhaustive grid; ties the
    residue-formula w to Riemann-Roch."""
    rng = Rng(seed)
    checked = 0
    violations = []
    for g in gs:
        for p in ps:
            ctx = PrimeField(p)
            for ci, X in enumerate(_suite_curves(g, ctx, rng.spawn())):
                w = canonical_bundle(X)
                for d in range(0, 2 * g + 3):
                    for md in balanced_set(d, g):
                        for L in enumerate_bundles(X, md):
                            lhs = cohomology.h0(tensor(w, dual(L)))
                            rhs = cohomology.h0(L) - d + g - 1
                            checked += 1
                            if lhs != rhs:
                                violations.append(
                                    {"g": g, "p": p, "curve": ci,
                                     "md": list(md),
                                     "c": [str(x) for x in L.c],
                                     "lhs": lhs, "rhs": rhs})
    return SuiteResult(
        "serre", not violations,
        {"gs": list(gs), "ps": list(ps), "seed": seed},
        {"classes_checked": checked, "violations": violations[:10],
         "n_violations": len(violations)})


def suite_empty(gs=(0, 1, 2, 3, 4), ps=(7,), seed=DEFAULT_SEED, jobs=1):
    """Every provably-empty (md, r) case scans to an exact zero count."""
    rng = Rng(seed)
    cases = 0
    violations = []
    for g in gs:
        for p in ps:
            ctx = PrimeField(p)
            for ci, X in enumerate(_suite_curves(g, ctx, rng.spawn())):
                for d in range(-1, g + 3):
                    for md in balanced_set(d, g):
                        for r in range(0, 3):
                            if not predicted_empty(md, r, g):
                                continue
                            cases += 1
                            rep = bn_enumerate(X, BNQuery(md, r),
                                               witness_cap=2)
                            if rep.count != 0:
                                violations.append(
                                    {"g": g, "p": p, "curve": ci,
                                     "md": list(md), "r": r,
                                     "count": rep.count})
    return SuiteResult(
        "empty", not violations,
        {"gs": list(gs), "ps": list(ps), "seed": seed},
        {"cases": cases, "violations": violations[:10],
         "n_violations": len(violations)})


def suite_lemma_e(ps=(5, 7), seed=DEFAULT_SEED, jobs=1, g=3):
    """Degree-split bound h0 <= d1+d2+1-min(d2,g), its equality regime
    d2 >= g, and the descent dictionary on one-node regluings: the fiber
    over M contains exactly one (resp. zero, resp. all) classes matching
    h0(M) according to the descent result."""
    rng = Rng(seed)
    checked = 0
    problems = []
    for p in ps:
        ctx = PrimeField(p)
        X = (random_curve(g, ctx, rng.spawn()) if p >= g + 3
             else standard_curve(g, ctx))
        # (a)+(b): bound and equality regime, exhaustive on a small grid
        for lo in range(-1, g + 2):
            for hi in range(lo, g + 2):
                bound = lo + hi + 1 - min(hi, g)
                for md in ((lo, hi), (hi, lo)):
                    for L in enumerate_bundles(X, md):
                        n = cohomology.h0(L)
                        checked += 1
                        if n > bound:
                            problems.append({"p": p, "kind": "bound",
                                             "md": list(md), "h0": n,
                                             "bound": bound})
                        if hi >= g and n != bound:
                            problems.append({"p": p, "kind": "equality",
                                             "md": list(md), "h0": n,
                                             "bound": bound})
        # (c): descent fibers over one reglued node
        Y, removed = normalize_at(X, [g])
        pair = removed[0]
        for d in (1, 2):
            for md in balanced_set(d, g - 1):
                if md[0] < -1 or md[1] < -1:
                    continue
                for M in enumerate_bundles(Y, md):
                    if cohomology.h0(M) == 0:
                        continue
                    res = cohomology.descend(M, [pair])
                    nodes = list(Y.nodes) + [pair]
                    fiber = []
                    for unit in ctx.units():
                        L = LineBundle(BinaryCurve(ctx, nodes), md,
                                       list(M.c) + [unit])
                        if cohomology.h0(L) == cohomology.h0(M):
                            fiber.append(unit)
                    checked += 1
                    expected = 0 if not res.exists else 1 if res.unique else p - 1
                    ok = len(fiber) == expected
                    if res.exists and res.unique:
                        # gluing vectors canonicalize, so compare as bundles
                        want = LineBundle(BinaryCurve(ctx, nodes), md,
                                          list(M.c) + [fiber[0]])
                        ok = ok and res.bundle == want
                    if not ok:
                        problems.append({"p": p, "kind": "descent-fiber",
                                         "md": list(md),
                                         "c": [str(x) for x in M.c],
                                         "fiber": len(fiber),
                                         "exists": res.exists,
                                         "unique": res.unique})
    return SuiteResult(
        "lemma-e", not problems,
        {"g": g, "ps": list(ps), "seed": seed},
        {"checked": checked, "problems": problems[:10],
         "n_problems": len(problems)})


def _hyp_check(curve_json: dict) -> dict:
    """Worker: compare the matching-map test against the exhaustive pencil
    scan on one curve. Safe to run in a subprocess."""
    X = BinaryCurve.from_json(curve_json)
    flag, _ = is_hyperelliptic_fast(X)
    rep = bn_enumerate(X, BNQuery((1, 1), 1), witness_cap=2)
    agree = flag == (rep.count > 0)
    witness_ok = None
    if flag and agree:
        H = hyperelliptic_class(X)
        witness_ok = rep.count == 1 and rep.witnesses[0] == H.c
    return {"hyp": flag, "count": rep.count, "agree": agree,
            "witness_ok": witness_ok}


def suite_hyperelliptic(gs=(3, 4), ps=(7, 11), n_random=150, n_special=50,
                        seed=DEFAULT_SEED, jobs=1):
    """Matching-map hyperellipticity test vs exhaustive degree-2 pencil scan.

    Seeded curves per (g, p): n_random generic ones plus n_special built
    hyperelliptic by construction, so both directions of the equivalence
    get exercised. When hyperelliptic, the scan must find exactly one class
    and it must be the constructed pencil. Per-curve checks fan out to a
    process pool when jobs > 1; results are order-preserving either way.
    """
    rng = Rng(seed)
    combos = []
    for g in gs:
        for p in ps:
            ctx = PrimeField(p)
            crng = rng.spawn()
            curves = [random_curve(g, ctx, crng) for _ in range(n_random)]
            curves += [random_hyperelliptic_curve(g, ctx, crng)
                       for _ in range(n_special)]
            combos.append((g, p, [X.to_json() for X in curves]))
    summary = []
    failures = 0
    for g, p, jsons in combos:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_hyp_check, jsons, chunksize=8))
        else:
            results = [_hyp_check(cj) for cj in jsons]
        bad = [{"index": i, **res} for i, res in enumerate(results)
               if not res["agree"] or res["witness_ok"] is False]
        failures += len(bad)
        summary.append({"g": g, "p": p, "n": len(jsons),
                        "n_hyperelliptic": sum(r["hyp"] for r in results),
                        "failures": bad[:10], "n_failures": len(bad)})
    return SuiteResult(
        "hyperelliptic", failures == 0,
        {"gs": list(gs), "ps": list(ps), "n_random": n_random,
         "n_special": n_special, "seed": seed},
        {"combos": summary})


# Frozen integer-coordinate genus-4 fixtures for the dimension suites.
# The second differs from the first by swapping two branch points on one
# side only, which breaks the single matching map.
def _int_hyp_curve(g: int) -> BinaryCurve:
    return standard_curve(g, Rationals())


def _int_nonhyp_curve4() -> BinaryCurve:
    from .curve import ProjPoint
    ctx = Rationals()
    a = [ProjPoint.finite(ctx, ctx.from_int(i)) for i in range(4)]
    a.append(ProjPoint.infinity(ctx))
    b = [a[0], a[1], a[3], a[2], a[4]]
    return BinaryCurve(ctx, list(zip(a, b)))


MARTENS_PRIMES = (13, 23)


def _reduced(X: BinaryCurve, p: int) -> BinaryCurve:
    from .brill_noether import reduce_curve_mod
    return reduce_curve_mod(X, p)


def suite_martens(seed=DEFAULT_SEED, jobs=1, primes=MARTENS_PRIMES):
    """Dimension predictions in the window 2 <= d <= g-1 via growth exponents:
    exactly d-2r on a hyperelliptic curve, at most d-2r-1 otherwise, and the
    r > min(d_i) cases are empty."""
    problems = []
    md, r = (1, 2), 1
    Xh = _int_hyp_curve(4)
    Xn = _int_nonhyp_curve4()
    if is_hyperelliptic_fast(_reduced(Xh, primes[0]))[0] is not True:
        problems.append({"kind": "fixture", "detail": "hyp fixture broken"})
    if is_hyperelliptic_fast(_reduced(Xn, primes[0]))[0] is not False:
        problems.append({"kind": "fixture", "detail": "nonhyp fixture broken"})

    pred_h = martens_bound(4, md, r, hyperelliptic=True)
    est_h = estimate_dim(Xh, BNQuery(md, r), primes)
    if not (pred_h.kind == "exact" and est_h.kind == "ok"
            and est_h.rounded == pred_h.value):
        problems.append({"kind": "hyperelliptic-dim",
                         "prediction": pred_h.value,
                         "estimate": est_h.to_json()})
    pred_n = martens_bound(4, md, r, hyperelliptic=False)
    est_n = estimate_dim(Xn, BNQuery(md, r), primes)
    nonhyp_ok = (est_n.kind == "empty"
                 or (est_n.kind == "ok" and est_n.rounded <= pred_n.value))
    if not nonhyp_ok:
        problems.append({"kind": "nonhyp-dim", "bound": pred_n.value,
                         "estimate": est_n.to_json()})
    pred_e = martens_bound(4, (0, 3), 1, hyperelliptic=True)
    empty_ok = pred_e.kind == "empty"
    Xp = _reduced(Xh, primes[0])
    empty_ok = empty_ok and bn_enumerate(
        Xp, BNQuery((0, 3), 1), witness_cap=1).count == 0
    if not empty_ok:
        problems.append({"kind": "empty-case"})
    return SuiteResult(
        "martens", not problems,
        {"primes": list(primes), "seed": seed},
        {"hyperelliptic": est_h.to_json(), "non_hyperelliptic": est_n.to_json(),
         "problems": problems})


def suite_theta(seed=DEFAULT_SEED, jobs=1, ps=(7, 11, 23)):
    """Hyperelliptic genus 3: the degree-2 pencil is the unique md-(1,1)
    class with two sections at every prime, i.e. a 0-dimensional locus
    (g-3 = 0); the two-prime exponent agrees."""
    X = _int_hyp_curve(3)
    counts = {}
    problems = []
    for p in ps:
        Xp = _reduced(X, p)
        rep = bn_enumerate(Xp, BNQuery((1, 1), 1), witness_cap=2)
        counts[p] = rep.count
        if rep.count != 1:
            problems.append({"kind": "count", "p": p, "count": rep.count})
        H = hyperelliptic_class(Xp)
        if rep.witnesses[0] != H.c:
            problems.append({"kind": "witness", "p": p})
    est = estimate_dim(X, BNQuery((1, 1), 1), list(ps)[:2])
    if not (est.kind == "ok" and est.rounded == 0):
        problems.append({"kind": "estimate", "estimate": est.to_json()})
    return SuiteResult(
        "theta", not problems,
        {"ps": list(ps), "seed": seed},
        {"counts": {str(p): n for p, n in counts.items()},
         "estimate": est.to_json(), "problems": problems})


def suite_bn(seed=DEFAULT_SEED, jobs=1, n_curves=100):
    """Sampled existence/emptiness verdicts for r <= 2 against rho."""
    neg = bn_suite(4, 1, [11], n_curves, seed, mds=[(1, 1)])
    pos = bn_suite(3, 1, [7], n_curves, seed, mds=balanced_set(3, 3))
    pos_rows = [row for row in pos.rows
                if row.rho >= 1 and not predicted_empty(row.md, 1, 3)
                and row.verdict == "pass"]
    zero = bn_suite(3, 2, [7], min(n_curves, 50), seed, mds=[(2, 2)])
    # rho = 0 gets no verdict from sampling, but this particular locus is
    # pinned: the only class with three sections in degree 2g-2 is canonical
    rng = Rng(seed)
    ctx = PrimeField(7)
    omega_ok = True
    for _ in range(min(n_curves, 50)):
        X = random_curve(3, ctx, rng.spawn())
        rep = bn_enumerate(X, BNQuery((2, 2), 2), witness_cap=2)
        w = canonical_bundle(X)
        if rep.count != 1 or rep.witnesses[0] != w.c:
            omega_ok = False
    passed = (neg.passed and pos.passed and zero.passed
              and bool(pos_rows) and omega_ok)
    return SuiteResult(
        "bn", passed,
        {"seed": seed, "n_curves": n_curves},
        {"rho_negative": neg.to_json(), "rho_positive": pos.to_json(),
         "rho_zero": zero.to_json(), "canonical_pinned": omega_ok})


def suite_very_ample(seed=DEFAULT_SEED, jobs=1, gs=(3, 4), p=11, trials=15,
                     n_curves=2):
    """Canonical embedding separates points/tangents iff not hyperelliptic."""
    rng = Rng(seed)
    ctx = PrimeField(p)
    rows = []
    ok = True
    for g in gs:
        for kind in ("random", "hyperelliptic"):
            for _ in range(n_curves):
                if kind == "random":
                    X = random_curve(g, ctx, rng.spawn())
                else:
                    X = random_hyperelliptic_curve(g, ctx, rng.spawn())
                rep = verify_canonical_very_ample(X, rng.spawn(),
                                                  trials=trials)
                ok = ok and rep.passed
                rows.append({"g": g, "kind": kind,
                             "hyperelliptic": rep.hyperelliptic,
                             "very_ample": rep.very_ample,
                             "passed": rep.passed})
    return SuiteResult(
        "very-ample", ok,
        {"gs": list(gs), "p": p, "trials": trials, "n_curves": n_curves,
         "seed": seed},
        {"rows": rows})


def _check_partial_order(strata) -> bool:
    keys = [s for s in strata if isinstance(s, Stratum)]
    for a in keys:
        if not closure_leq(a, a):
            return False
    for a in keys:
        for b in keys:
            if closure_leq(a, b) and closure_leq(b, a) and a != b:
                return False
            for c in keys:
                if closure_leq(a, b) and closure_leq(b, c) \
                        and not closure_leq(a, c):
                    return False
    return True


def suite_wbar(seed=DEFAULT_SEED, jobs=1, p=7):
    """Stratum combinatorics and boundary-locus assembly."""
    from .brill_noether import assemble_Wbar
    rng = Rng(seed)
    ctx = PrimeField(p)
    problems = []
    X2 = standard_curve(2, ctx)
    s22 = enumerate_strata(X2, 2)
    if len(s22) != 12 or picard_type(2, 2) != "neron" \
            or any(isinstance(s, Ell0) for s in s22):
        problems.append({"kind": "g2d2-strata", "n": len(s22)})
    s21 = enumerate_strata(X2, 1)
    if picard_type(1, 2) != "degeneration" or not isinstance(s21[-1], Ell0):
        problems.append({"kind": "g2d1-ell0"})
    for strata in (s22, s21):
        if not _check_partial_order(strata):
            problems.append({"kind": "partial-order"})
    wb = assemble_Wbar(X2, 1, 0)
    if wb.ell0_excluded is not True:
        problems.append({"kind": "ell0-in-wbar", "d": 1, "r": 0})
    X3 = random_curve(3, ctx, rng.spawn())
    wb3 = assemble_Wbar(X3, 2, 1)
    if wb3.ell0_excluded is not True:
        problems.append({"kind": "ell0-in-wbar", "d": 2, "r": 1})
    wbn = assemble_Wbar(X2, 2, 1)
    if wbn.ell0_excluded is not None:
        problems.append({"kind": "neron-ell0"})
    return SuiteResult(
        "wbar", not problems,
        {"p": p, "seed": seed},
        {"g2_d2_strata": len(s22), "g2_d1_strata": len(s21) - 1,
         "wbar_g2_d1_total": wb.total, "wbar_g3_d2_total": wb3.total,
         "problems": problems})


SUITES = {
    "riemann": suite_riemann,
    "clifford": suite_clifford,
    "serre": suite_serre,
    "empty": suite_empty,
    "lemma-e": suite_lemma_e,
    "hyperelliptic": suite_hyperelliptic,
    "martens": suite_martens,
    "theta": suite_theta,
    "bn": suite_bn,
    "very-ample": suite_very_ample,
    "wbar": suite_wbar,
}
