"""Section spaces of line bundles on binary curves.

Everything reduces to one matrix: row j expresses the gluing condition
f(p_j) = c_j·h(q_j) on the monomial coefficients of the form pair (f, h).
h0 is its nullity; twists down by effective divisors add vanishing rows.
h1 comes from Riemann-Roch by definition, which keeps Serre duality an
actual cross-check of the canonical-bundle construction rather than a
tautology.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd

from .bundles import EffectiveDivisor, LineBundle
from .curve import BinaryCurve, ProjPoint
from .fields import FieldCtx
from .linalg import kernel_basis, rank_rows


def monomial_values(ctx: FieldCtx, d: int, pt: ProjPoint):
    """Values of the d+1 degree-d monomials a^{d-i} b^i at rep(pt), i = 0..d."""
    if d < 0:
        return []
    if pt.is_infinity():
        return [ctx.one] + [ctx.zero] * d
    vals = [ctx.one]
    for _ in range(d):
        vals.append(ctx.mul(vals[-1], pt.a))
    vals.reverse()
    return vals


def derivative_row(ctx: FieldCtx, d: int, pt: ProjPoint, order: int):
    """Row of s-th formal derivatives of the monomials in pt's affine chart.

    Finite pt: chart coordinate t = a/b, monomial i -> t^{d-i}. At infinity:
    chart u = b/a, monomial i -> u^i, so the row is s!·delta_{i,s}.
    """
    if d < 0:
        return []
    if order == 0:
        return monomial_values(ctx, d, pt)
    if pt.is_infinity():
        row = [ctx.zero] * (d + 1)
        if order <= d:
            row[order] = ctx.from_int(factorial(order))
        return row
    row = []
    for i in range(d + 1):
        e = d - i
        if e < order:
            row.append(ctx.zero)
            continue
        ff = 1
        for u in range(order):
            ff *= e - u
        row.append(ctx.mul(ctx.from_int(ff), ctx.pow(pt.a, e - order)))
    return row


def gluing_profile(X: BinaryCurve, md):
    """Per-node monomial evaluations (E1[j], E2[j]) shared by a whole md-torus."""
    d1, d2 = md
    e1 = [monomial_values(X.ctx, d1, p) for p, _ in X.nodes]
    e2 = [monomial_values(X.ctx, d2, q) for _, q in X.nodes]
    return e1, e2


def rows_for_gluing(L: LineBundle, profile=None):
    """Gluing matrix rows: row j = [E_{d1}(p_j) | -c_j · E_{d2}(q_j)]."""
    ctx = L.ctx
    e1, e2 = profile if profile is not None else gluing_profile(L.curve, L.md)
    rows = []
    for j, cj in enumerate(L.c):
        neg = ctx.neg(cj)
        rows.append(e1[j] + [ctx.mul(neg, v) for v in e2[j]])
    return rows


def _vanishing_rows(L: LineBundle, D: EffectiveDivisor):
    ctx = L.ctx
    d1, d2 = L.md
    k1, k2 = max(d1 + 1, 0), max(d2 + 1, 0)
    rows = []
    for comp, pt, mult in D.entries:
        dcomp = d1 if comp == 1 else d2
        if mult >= 2 and ctx.is_prime_field() and ctx.p <= dcomp + 1:
            raise ValueError(
                f"field too small for derivative rows: need p > {dcomp + 1}")
        for order in range(mult):
            block = derivative_row(ctx, dcomp, pt, order)
            if comp == 1:
                rows.append(block + [ctx.zero] * k2)
            else:
                rows.append([ctx.zero] * k1 + block)
    return rows


def h0(L: LineBundle, profile=None) -> int:
    d1, d2 = L.md
    ncols = max(d1 + 1, 0) + max(d2 + 1, 0)
    if ncols == 0:
        return 0
    rows = rows_for_gluing(L, profile)
    return ncols - rank_rows(L.ctx, rows, ncols)


def h0_vanishing(L: LineBundle, D: EffectiveDivisor) -> int:
    """h0 of L twisted down by D, via vanishing rows on the gluing matrix."""
    if not L.curve.same_curve(D.curve):
        raise ValueError("divisor lives on a different curve")
    d1, d2 = L.md
    ncols = max(d1 + 1, 0) + max(d2 + 1, 0)
    if ncols == 0:
        return 0
    rows = rows_for_gluing(L) + _vanishing_rows(L, D)
    return ncols - rank_rows(L.ctx, rows, ncols)


def h1(L: LineBundle) -> int:
    return h0(L) - L.degree + L.curve.genus - 1


@dataclass(frozen=True)
class SectionSpace:
    """Kernel basis of the gluing (+ vanishing) matrix, split into (f, h) parts."""

    bundle: LineBundle
    vanishing: EffectiveDivisor | None = None
    basis: tuple = field(init=False)

    def __post_init__(self):
        L = self.bundle
        d1, d2 = L.md
        k1, k2 = max(d1 + 1, 0), max(d2 + 1, 0)
        rows = rows_for_gluing(L)
        if self.vanishing is not None:
            rows += _vanishing_rows(L, self.vanishing)
        vecs = kernel_basis(L.ctx, rows, k1 + k2) if k1 + k2 else []
        object.__setattr__(
            self, "basis",
            tuple((tuple(v[:k1]), tuple(v[k1:])) for v in vecs))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def value_at(self, sec_index: int, comp: int, pt: ProjPoint):
        L = self.bundle
        coeffs = self.basis[sec_index][0 if comp == 1 else 1]
        d = L.md[0] if comp == 1 else L.md[1]
        mono = monomial_values(L.ctx, d, pt)
        acc = L.ctx.zero
        for a, m in zip(coeffs, mono):
            acc = L.ctx.add(acc, L.ctx.mul(a, m))
        return acc


def point_divisor(X: BinaryCurve, pts) -> EffectiveDivisor:
    acc = {}
    for comp, pt in pts:
        acc[(comp, pt)] = acc.get((comp, pt), 0) + 1
    return EffectiveDivisor(X, [(c, pt, m) for (c, pt), m in acc.items()])


def neutral_pair(M: LineBundle, p, q) -> bool:
    """Do p and q impose the same vanishing conditions on H0(M)?

    p, q are (component, point) on the smooth locus. True iff
    h0(M-p) = h0(M-q) = h0(M-p-q). Coinciding points are rejected: the
    notion is only used for genuinely distinct regluing branch data.
    """
    if p == q:
        raise ValueError("neutral pair needs distinct points")
    X = M.curve
    hp = h0_vanishing(M, point_divisor(X, [p]))
    hq = h0_vanishing(M, point_divisor(X, [q]))
    hpq = h0_vanishing(M, point_divisor(X, [p, q]))
    return hp == hq == hpq


@dataclass(frozen=True)
class DescentResult:
    exists: bool
    bundle: LineBundle | None
    unique: bool


def descend(M: LineBundle, pairs) -> DescentResult:
    """Reglue node branch pairs (p_i on C1, q_i on C2) under M, if possible.

    A bundle L on the reglued curve with h0(L) = h0(M) exists iff every pair
    is neutral; then each gluing scalar is the ratio s(p_i)/s(q_i) taken from
    the first basis section not vanishing at q_i (neutrality makes the ratio
    section-independent — asserted). Pairs of base points accept any scalar,
    so uniqueness fails exactly when one occurs. New nodes are appended after
    the existing ones, in the order given.
    """
    ctx = M.ctx
    Y = M.curve
    space = SectionSpace(M)
    if space.dim == 0:
        raise ValueError("descend needs h0(M) >= 1")
    branch1 = set(Y.branch_points(1))
    branch2 = set(Y.branch_points(2))
    for p, q in pairs:
        if p in branch1 or q in branch2:
            raise ValueError("regluing point collides with an existing node")

    exists = True
    unique = True
    new_c = []
    for p, q in pairs:
        v = [space.value_at(s, 1, p) for s in range(space.dim)]
        w = [space.value_at(s, 2, q) for s in range(space.dim)]
        vz = all(x == ctx.zero for x in v)
        wz = all(x == ctx.zero for x in w)
        if vz and wz:
            # base point pair: condition f(p) = c·h(q) is vacuous
            new_c.append(ctx.one)
            unique = False
        elif vz or wz:
            exists = False
        else:
            s0 = next(s for s in range(space.dim) if w[s] != ctx.zero)
            cj = ctx.div(v[s0], w[s0])
            if cj == ctx.zero or any(
                    vs != ctx.mul(cj, ws) for vs, ws in zip(v, w)):
                exists = False
            else:
                new_c.append(cj)

    # independent check: descent is possible iff every pair is neutral
    neutral = all(neutral_pair(M, (1, p), (2, q)) for p, q in pairs)
    assert neutral == exists

    if not exists:
        return DescentResult(False, None, False)
    X = BinaryCurve(ctx, list(Y.nodes) + [tuple(pr) for pr in pairs])
    L = LineBundle(X, M.md, list(M.c) + new_c)
    assert h0(L) == space.dim
    return DescentResult(True, L, unique)


# ---------------------------------------------------------------------------
# base locus


def _poly_trim(ctx, coeffs):
    c = list(coeffs)
    while c and c[-1] == ctx.zero:
        c.pop()
    return c


def _poly_mod(ctx, a, b):
    # remainder of a by b, coefficients ascending, b nonzero
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = ctx.inv(lb)
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        q = ctx.mul(a[-1], inv)
        for i in range(db + 1):
            a[da - db + i] = ctx.sub(a[da - db + i], ctx.mul(q, b[i]))
        a = _poly_trim(ctx, a)
    return a


def _poly_gcd(ctx, a, b):
    a, b = _poly_trim(ctx, a), _poly_trim(ctx, b)
    while b:
        a, b = b, _poly_mod(ctx, a, b)
    return a


def _poly_eval(ctx, coeffs, x):
    acc = ctx.zero
    for c in reversed(coeffs):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def _divisors(n: int):
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            out.append(n // i)
        i += 1
    return sorted(set(out))


def _field_roots(ctx, coeffs):
    """Roots of a nonzero polynomial lying in the ground field."""
    coeffs = _poly_trim(ctx, coeffs)
    if not coeffs or len(coeffs) == 1:
        return []
    if ctx.is_prime_field():
        return [x for x in range(ctx.p) if _poly_eval(ctx, coeffs, x) == 0]
    # rational roots: clear denominators, candidates (± div a0 / div an)
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    roots = []
    k = 0
    while ints[k] == 0:
        k += 1
    if k > 0:
        roots.append(Fraction(0))
    a0, an = ints[k], ints[-1]
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and _poly_eval(ctx, coeffs, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


@dataclass(frozen=True)
class BaseLocus:
    smooth_points: tuple  # (component, ProjPoint), sorted
    nodes: tuple          # node indices where every section vanishes
    full_components: tuple  # components on which every section is identically 0


def _dehomogenize(coeffs):
    # monomial index i is t^{d-i}: reverse gives ascending powers of t
    return list(reversed(coeffs))


def base_locus(L: LineBundle) -> BaseLocus:
    """Common vanishing locus of all global sections.

    Smooth base points come from the gcd of the f-parts (component 1) and
    h-parts (component 2) of a kernel basis; only roots in the ground field
    are found, so geometric base points over extensions stay invisible.
    """
    ctx = L.ctx
    space = SectionSpace(L)
    if space.dim == 0:
        raise ValueError("base locus needs h0 >= 1")
    nodes = tuple(
        j for j in range(len(L.curve.nodes))
        if all(space.value_at(s, 1, L.curve.nodes[j][0]) == ctx.zero
               for s in range(space.dim)))
    smooth = []
    full = []
    for comp in (1, 2):
        d = L.md[0] if comp == 1 else L.md[1]
        branch = set(L.curve.branch_points(comp))
        polys = [_poly_trim(ctx, _dehomogenize(sec[comp - 1]))
                 for sec in space.basis]
        polys = [p for p in polys if p]
        if not polys:
            full.append(comp)
            continue
        g = polys[0]
        for p in polys[1:]:
            g = _poly_gcd(ctx, g, p)
        for r in _field_roots(ctx, g):
            pt = ProjPoint.finite(ctx, r)
            if pt not in branch:
                smooth.append((comp, pt))
        if d >= 0 and all(sec[comp - 1][0] == ctx.zero for sec in space.basis):
            pt = ProjPoint.infinity(ctx)
            if pt not in branch:
                smooth.append((comp, pt))
    def key(item):
        comp, pt = item
        return (comp, 1 if pt.is_infinity() else 0, pt.a)
    return BaseLocus(tuple(sorted(smooth, key=key)), nodes, tuple(full))
