"""Line bundles on binary curves via multidegree + gluing vector.

A bundle is (multidegree (d1,d2), one unit c_j per node): global sections are
pairs of homogeneous forms (f of degree d1, h of degree d2) with
f(p_j) = c_j * h(q_j) at the fixed representatives (a,1)/(1,0). Gluing
vectors are stored canonically (last coordinate = 1), so equality of classes
is literal equality and each md-torus is exactly (k*)^g.
"""
from __future__ import annotations

from .curve import BinaryCurve, MoebiusMap, ProjPoint, normalize_at
from .fields import FieldCtx
from .rng import Rng


class LineBundle:
    __slots__ = ("curve", "md", "c")

    def __init__(self, curve: BinaryCurve, md, c):
        ctx = curve.ctx
        d1, d2 = int(md[0]), int(md[1])
        c = tuple(c)
        if len(c) != len(curve.nodes):
            raise ValueError("gluing vector length != number of nodes")
        if any(x == ctx.zero for x in c):
            raise ValueError("gluing coordinates must be units")
        if c:  # canonical form: divide through by the last coordinate
            last_inv = ctx.inv(c[-1])
            c = tuple(ctx.mul(x, last_inv) for x in c)
        self.curve = curve
        self.md = (d1, d2)
        self.c = c

    @property
    def ctx(self) -> FieldCtx:
        return self.curve.ctx

    @property
    def degree(self) -> int:
        return self.md[0] + self.md[1]

    def __eq__(self, other):
        return (isinstance(other, LineBundle)
                and self.curve.same_curve(other.curve)
                and self.md == other.md and self.c == other.c)

    def __hash__(self):
        return hash((self.md, self.c))

    def __repr__(self):
        return f"LineBundle(md={self.md}, c={self.c!r})"

    def to_json(self) -> dict:
        ctx = self.ctx
        return {"md": list(self.md), "c": [list(ctx.to_pair(x)) for x in self.c]}


def bundle_from_json(X: BinaryCurve, obj: dict) -> LineBundle:
    ctx = X.ctx
    md = (int(obj["md"][0]), int(obj["md"][1]))
    c = [ctx.from_pair(pair) for pair in obj["c"]]
    return LineBundle(X, md, c)


def trivial(X: BinaryCurve) -> LineBundle:
    one = X.ctx.one
    return LineBundle(X, (0, 0), [one] * len(X.nodes))


def scale(L: LineBundle, lam) -> LineBundle:
    if lam == L.ctx.zero:
        raise ValueError("scalar must be a unit")
    return LineBundle(L.curve, L.md, [L.ctx.mul(lam, x) for x in L.c])


def tensor(L: LineBundle, M: LineBundle) -> LineBundle:
    if not L.curve.same_curve(M.curve):
        raise ValueError("bundles live on different curves")
    ctx = L.ctx
    md = (L.md[0] + M.md[0], L.md[1] + M.md[1])
    return LineBundle(L.curve, md, [ctx.mul(a, b) for a, b in zip(L.c, M.c)])


def dual(L: LineBundle) -> LineBundle:
    ctx = L.ctx
    return LineBundle(L.curve, (-L.md[0], -L.md[1]), [ctx.inv(x) for x in L.c])


def power(L: LineBundle, n: int) -> LineBundle:
    ctx = L.ctx
    md = (n * L.md[0], n * L.md[1])
    return LineBundle(L.curve, md, [ctx.pow(x, n) for x in L.c])


def is_isomorphic(L: LineBundle, M: LineBundle) -> bool:
    if not L.curve.same_curve(M.curve):
        raise ValueError("bundles live on different curves")
    return L.md == M.md and L.c == M.c


def bundle_count(X: BinaryCurve) -> int:
    """Size of each multidegree torus over a finite field: (p-1)^g."""
    ctx = X.ctx
    if not ctx.is_prime_field():
        raise ValueError("enumeration needs a finite field")
    return (ctx.p - 1) ** max(X.genus, 0)


def bundle_at(X: BinaryCurve, md, index: int) -> LineBundle:
    """index -> class, base-(p-1) digits, first gluing coordinate slowest.

    The last coordinate is pinned to 1, so indices `0 .. (p-1)^g - 1`
    enumerate each isomorphism class exactly once (lexicographic in the
    free coordinates, units ascending 1..p-1).
    """
    ctx = X.ctx
    total = bundle_count(X)
    if not (0 <= index < total):
        raise ValueError("index out of range")
    g = X.genus
    u = ctx.p - 1
    free = max(g, 0)
    digits = []
    for _ in range(free):
        digits.append(index % u)
        index //= u
    digits.reverse()
    c = [d + 1 for d in digits]
    if g >= 0:
        c.append(1)
    return LineBundle(X, md, c)


def enumerate_bundles(X: BinaryCurve, md):
    """All (p-1)^g classes of the given multidegree, in bundle_at order."""
    for i in range(bundle_count(X)):
        yield bundle_at(X, md, i)


def random_bundle(X: BinaryCurve, md, rng: Rng) -> LineBundle:
    units = X.ctx.units()
    c = [rng.choice(units) for _ in range(max(X.genus, 0))]
    c.append(X.ctx.one)
    return LineBundle(X, md, c)


class EffectiveDivisor:
    """Formal sum of smooth points; entries (component, point, multiplicity)."""

    def __init__(self, X: BinaryCurve, entries):
        branch = {1: set(X.branch_points(1)), 2: set(X.branch_points(2))}
        seen = set()
        norm = []
        for comp, pt, mult in entries:
            if comp not in (1, 2):
                raise ValueError("component must be 1 or 2")
            mult = int(mult)
            if mult < 1:
                raise ValueError("multiplicities must be >= 1")
            if pt in branch[comp]:
                raise ValueError(f"divisor point {pt!r} sits on a node")
            if (comp, pt) in seen:
                raise ValueError("duplicate divisor point; merge multiplicities")
            seen.add((comp, pt))
            norm.append((comp, pt, mult))
        self.curve = X
        self.entries = tuple(norm)

    def degree_on(self, comp: int) -> int:
        return sum(m for c, _, m in self.entries if c == comp)

    @property
    def multidegree(self):
        return (self.degree_on(1), self.degree_on(2))

    @property
    def degree(self) -> int:
        return self.degree_on(1) + self.degree_on(2)

    def __add__(self, other: "EffectiveDivisor") -> "EffectiveDivisor":
        if not self.curve.same_curve(other.curve):
            raise ValueError("divisors on different curves")
        acc = {}
        for comp, pt, m in self.entries + other.entries:
            acc[(comp, pt)] = acc.get((comp, pt), 0) + m
        return EffectiveDivisor(self.curve,
                                [(c, pt, m) for (c, pt), m in acc.items()])

    def to_json(self):
        ctx = self.curve.ctx
        return [[comp, [ctx.fmt(pt.a), ctx.fmt(pt.b)], mult]
                for comp, pt, mult in self.entries]

    def __repr__(self):
        return f"EffectiveDivisor({list(self.entries)!r})"


def _linear_factor_at(ctx, root: ProjPoint, pt: ProjPoint):
    # value at rep(pt) of the degree-1 form vanishing exactly at `root`
    if root.is_infinity():
        return pt.b
    return ctx.sub(pt.a, ctx.mul(root.a, pt.b))


def from_divisor(X: BinaryCurve, D: EffectiveDivisor) -> LineBundle:
    """O_X(D): gluing c_j = A(p_j)/B(q_j), A and B the forms cutting out D.

    Works with homogeneous linear factors, so points at infinity need no
    special casing; at finite points this is the monic-polynomial ratio.
    The pair (A, B) itself is a section, so h0 >= 1 always.
    """
    if not X.same_curve(D.curve):
        raise ValueError("divisor lives on a different curve")
    ctx = X.ctx
    c = []
    for p, q in X.nodes:
        num = ctx.one
        den = ctx.one
        for comp, pt, mult in D.entries:
            if comp == 1:
                num = ctx.mul(num, ctx.pow(_linear_factor_at(ctx, pt, p), mult))
            else:
                den = ctx.mul(den, ctx.pow(_linear_factor_at(ctx, pt, q), mult))
        c.append(ctx.div(num, den))
    return LineBundle(X, D.multidegree, c)


def move_curve(X: BinaryCurve, M1: MoebiusMap, M2: MoebiusMap) -> BinaryCurve:
    nodes = [(M1.apply(p), M2.apply(q)) for p, q in X.nodes]
    return BinaryCurve(X.ctx, nodes)


def apply_moebius(L: LineBundle, M1: MoebiusMap, M2: MoebiusMap) -> LineBundle:
    """Transport L to the coordinate-moved curve (h0 is preserved).

    With M1·rep(p_j) = mu_j·rep(p'_j) and M2·rep(q_j) = nu_j·rep(q'_j) the
    gluing transforms as c'_j = c_j · nu_j^{d2} · mu_j^{-d1}.
    """
    ctx = L.ctx
    d1, d2 = L.md
    nodes = []
    c = []
    for (p, q), cj in zip(L.curve.nodes, L.c):
        p2, mu = M1.apply_with_scale(p)
        q2, nu = M2.apply_with_scale(q)
        nodes.append((p2, q2))
        c.append(ctx.mul(cj, ctx.mul(ctx.pow(nu, d2), ctx.pow(mu, -d1))))
    return LineBundle(BinaryCurve(ctx, nodes), (d1, d2), c)


def _finitizing_map(ctx, pts) -> MoebiusMap:
    """Moebius map sending every listed point to a finite one (t -> 1/(t-a))."""
    if not any(pt.is_infinity() for pt in pts):
        return MoebiusMap.identity(ctx)
    finite = {pt.a for pt in pts if not pt.is_infinity()}
    limit = ctx.p if ctx.is_prime_field() else len(finite) + 1
    for n in range(limit):
        a = ctx.from_int(n)
        if a not in finite:
            return MoebiusMap(ctx, ctx.zero, ctx.one, ctx.one, ctx.neg(a))
    raise ValueError("no free coordinate left for re-coordination")


def canonical_bundle(X: BinaryCurve) -> LineBundle:
    """Dualizing bundle, md (g-1, g-1).

    Sections are pairs of differentials with simple poles along the nodes and
    opposite residues there; with all branch points finite that forces
    c_j = -prod_{k != j}(p_j - p_k) / prod_{k != j}(q_j - q_k). Non-finite
    branch points are moved away first and the gluing transported back.
    Verifies h0 = g before returning.
    """
    g = X.genus
    if g < 1:
        raise ValueError("canonical bundle construction needs g >= 1")
    ctx = X.ctx
    A = _finitizing_map(ctx, X.branch_points(1))
    B = _finitizing_map(ctx, X.branch_points(2))
    X2 = move_curve(X, A, B)
    ps = [p.a for p in X2.branch_points(1)]
    qs = [q.a for q in X2.branch_points(2)]
    c2 = []
    for j in range(g + 1):
        num = ctx.one
        den = ctx.one
        for k in range(g + 1):
            if k != j:
                num = ctx.mul(num, ctx.sub(ps[j], ps[k]))
                den = ctx.mul(den, ctx.sub(qs[j], qs[k]))
        c2.append(ctx.neg(ctx.div(num, den)))
    L2 = LineBundle(X2, (g - 1, g - 1), c2)
    L = apply_moebius(L2, A.inverse(), B.inverse())
    assert L.curve.same_curve(X)
    L = LineBundle(X, L.md, L.c)

    from . import cohomology  # deferred: cohomology builds bundles via descend
    got = cohomology.h0(L)
    assert got == g, f"canonical bundle sanity check failed: h0 = {got} != {g}"
    return L


def hyperelliptic_class(X: BinaryCurve) -> LineBundle:
    """The degree-2 pencil class H of a hyperelliptic curve, md (1,1), h0 = 2.

    The double cover is t on C1 and psi^{-1} on C2, so H is the pullback of
    O(1): with N = matrix of psi^{-1} and N·rep(q_j) = mu_j·rep(p_j), linear
    forms pull back to pairs (l, l∘N) and the gluing is c_j = mu_j^{-1}.
    """
    from .curve import is_hyperelliptic_fast

    flag, psi = is_hyperelliptic_fast(X)
    if not flag:
        raise ValueError("curve is not hyperelliptic")
    ctx = X.ctx
    N = psi.inverse()
    c = []
    for p, q in X.nodes:
        img, mu = N.apply_with_scale(q)
        assert img == p
        c.append(ctx.inv(mu))
    L = LineBundle(X, (1, 1), c)

    from . import cohomology
    got = cohomology.h0(L)
    assert got == 2, f"hyperelliptic class sanity check failed: h0 = {got} != 2"
    return L


def restrict_to_normalization(L: LineBundle, S) -> LineBundle:
    """Pull back to the partial normalization Y_S: drop the gluing rows in S."""
    Y, _ = normalize_at(L.curve, S)
    drop = set(S)
    c = [cj for j, cj in enumerate(L.c) if j not in drop]
    return LineBundle(Y, L.md, c)
