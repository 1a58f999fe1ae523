"""Cohomology of line bundles on a two-component nodal curve, end to end.

Builds a genus-3 curve over F_11, then walks the basic dimension facts:
the trivial bundle, the dualizing bundle from residue gluing, a bundle cut
out by an explicit effective divisor, and the base locus of a lopsided
multidegree.
"""

from bincurve import (
    BinaryCurve, PrimeField, Rng,
    canonical_bundle, from_divisor, trivial,
    EffectiveDivisor, random_curve, standard_curve,
)
from bincurve import cohomology


def main():
    ctx = PrimeField(11)
    X = standard_curve(3, ctx)
    print(f"curve: genus {X.genus}, {len(X.nodes)} nodes over F_{ctx.p}")

    O = trivial(X)
    print(f"trivial bundle:   md={O.md}  h0={cohomology.h0(O)}  "
          f"h1={cohomology.h1(O)}")

    w = canonical_bundle(X)
    print(f"dualizing bundle: md={w.md}  h0={cohomology.h0(w)}  "
          f"h1={cohomology.h1(w)}   (h0 = g, h1 = 1)")

    # a degree-5 effective divisor supported at smooth points; 5 = 2g-1, so
    # the section count is forced to d - g + 1 with no special classes
    p1 = X.smooth_points(1)[:3]
    p2 = X.smooth_points(2)[:2]
    D = EffectiveDivisor(X, [(1, p1[0], 1), (1, p1[1], 1), (1, p1[2], 1),
                             (2, p2[0], 1), (2, p2[1], 1)])
    L = from_divisor(X, D)
    print(f"O(D), deg D = {D.degree}: md={L.md}  h0={cohomology.h0(L)}  "
          f"(Riemann: d - g + 1 = {D.degree - X.genus + 1})")

    bl = cohomology.base_locus(L)
    print(f"base locus of O(D): smooth={bl.smooth_points} "
          f"nodes={bl.nodes} full={bl.full_components}")

    # lopsided multidegree: all sections vanish on the negative side
    rng = Rng(7)
    Y = random_curve(3, ctx, rng)
    from bincurve import LineBundle
    M = LineBundle(Y, (-1, 4), [ctx.one] * (Y.genus + 1))
    bl2 = cohomology.base_locus(M)
    print(f"md (-1, 4) on a random curve: h0={cohomology.h0(M)}, base locus "
          f"fills component {bl2.full_components} and nodes {bl2.nodes}")


if __name__ == "__main__":
    main()
