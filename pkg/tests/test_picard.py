from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bincurve.curve import standard_curve
from bincurve.fields import PrimeField
from bincurve.picard import (Ell0, PicardPoint, Stratum, balanced_set, bounds,
                             closure_leq, enumerate_strata, h0_bar,
                             is_balanced, is_balanced_blowup,
                             is_strictly_balanced, picard_type,
                             strata_to_json, stratum_points, strict_set)

F7 = PrimeField(7)


def test_bounds_are_exact_fractions():
    b = bounds(2, 3)
    assert b.lo == Fraction(-1) and b.hi == Fraction(3)
    assert b.is_integral
    b2 = bounds(2, 2)
    assert b2.lo == Fraction(-1, 2) and b2.hi == Fraction(5, 2)
    assert not b2.is_integral


def test_balanced_sets_frozen_small_cases():
    assert balanced_set(2, 3) == [(-1, 3), (0, 2), (1, 1), (2, 0), (3, -1)]
    assert strict_set(2, 3) == [(0, 2), (1, 1), (2, 0)]
    assert balanced_set(2, 2) == [(0, 2), (1, 1), (2, 0)]
    # N-type: open and closed intervals grab the same integers
    assert strict_set(2, 2) == balanced_set(2, 2)
    assert balanced_set(0, 1) == [(-1, 1), (0, 0), (1, -1)]
    assert balanced_set(-1, 0) == [(-1, 0), (0, -1)]


def test_balance_predicates_match_sets():
    for d, g in ((2, 3), (3, 3), (1, 2), (4, 4)):
        allowed = set(balanced_set(d, g))
        for d1 in range(-4, d + 5):
            md = (d1, d - d1)
            assert is_balanced(md, g) == (md in allowed)
        strict = set(strict_set(d, g))
        for md in allowed:
            assert is_strictly_balanced(md, g) == (md in strict)


def test_picard_type_parity():
    assert picard_type(2, 2) == "neron"
    assert picard_type(1, 2) == "degeneration"
    assert picard_type(3, 2) == "degeneration"   # m = 0 integral
    assert picard_type(2, 3) == "degeneration"
    assert picard_type(3, 3) == "neron"


def test_balanced_blowup_checks_exceptional_degrees():
    # blown-up multidegrees carry one extra entry of 1 per separated node
    assert is_balanced_blowup((1, 1, 1), 2)       # e=1: (1,1) balanced for g=1
    assert not is_balanced_blowup((3, 0, 1), 2)   # (3,0) not balanced for g=1
    assert not is_balanced_blowup((1, 1, 2), 2)   # exceptional degree must be 1


def test_strata_count_g2_d2():
    X = standard_curve(2, F7)
    strata = enumerate_strata(X, 2)
    assert len(strata) == 12
    assert all(isinstance(s, Stratum) for s in strata)
    # e = 0: 3 interior mds; e = 1: 3 nodes x 2 mds; e = 2: 3 pairs x 1 md
    by_e = {}
    for s in strata:
        by_e.setdefault(len(s.S), []).append(s)
    assert {e: len(v) for e, v in by_e.items()} == {0: 3, 1: 6, 2: 3}
    for s in strata:
        assert s.dim == 2 - len(s.S)
        assert is_balanced(s.md, 2 - len(s.S))


def test_strata_degeneration_type_has_ell0_last():
    X = standard_curve(2, F7)
    strata = enumerate_strata(X, 1)
    assert isinstance(strata[-1], Ell0)
    assert sum(isinstance(s, Ell0) for s in strata) == 1
    # strict interiors only, on every normalization level
    for s in strata[:-1]:
        assert is_strictly_balanced(s.md, 2 - len(s.S))
    assert len(strata) == 6  # 2 + 3x1 + 0 + ell0


def test_type_is_preserved_under_normalization():
    # m(d-e, g-e) = m(d, g): one-node normalizations inherit N/D-type
    for d in range(-1, 6):
        for g in (2, 3, 4):
            t = picard_type(d, g)
            for e in range(1, g):
                assert picard_type(d - e, g - e) == t


def test_closure_leq_is_partial_order_on_emitted_keys():
    X = standard_curve(3, F7)
    for d in (1, 2, 3):
        keys = [s for s in enumerate_strata(X, d) if isinstance(s, Stratum)]
        for a in keys:
            assert closure_leq(a, a)
            for b in keys:
                if closure_leq(a, b) and closure_leq(b, a):
                    assert a == b
                for c in keys:
                    if closure_leq(a, b) and closure_leq(b, c):
                        assert closure_leq(a, c)


def test_closure_examples():
    # closure_leq(a, b): b lies in the closure of a, i.e. b separates more
    # nodes and its multidegree drops coordinatewise
    X = standard_curve(2, F7)
    strata = {(s.S, s.md): s for s in enumerate_strata(X, 2)}
    interior = strata[((), (1, 1))]
    deeper = strata[((0,), (0, 1))]
    assert closure_leq(interior, deeper)
    assert not closure_leq(deeper, interior)
    other = strata[((), (0, 2))]
    sideways = strata[((0,), (1, 0))]
    assert not closure_leq(other, sideways)


def test_h0_bar_identified_point():
    assert h0_bar(Ell0(1, 2)) == 0   # m = -1
    assert h0_bar(Ell0(3, 2)) == 2   # m = 0
    assert h0_bar(Ell0(3, 4)) == 0   # m = -1
    assert h0_bar(Ell0(5, 2)) == 4   # m = 1
    with pytest.raises(ValueError):
        Ell0(2, 2)                   # m not integral: N-type has no such point


def test_picard_point_validates_strictness():
    from bincurve.bundles import LineBundle
    X = standard_curve(2, F7)
    st0 = [s for s in enumerate_strata(X, 1) if isinstance(s, Stratum)][0]
    pts = list(stratum_points(X, st0))
    assert len(pts) == 6 ** st0.dim
    # d=1 on g=2 is D-type: md (-1,2) sits on the balanced boundary and is
    # not a legal representative
    with pytest.raises(ValueError):
        PicardPoint((), LineBundle(X, (-1, 2), [1, 1, 1]))
    PicardPoint((), LineBundle(X, (0, 1), [1, 1, 1]))


def test_strata_json_shape():
    X = standard_curve(2, F7)
    items = strata_to_json(enumerate_strata(X, 1))
    assert items[-1] == {"ell0": True}
    assert {"S": [], "md": [0, 1], "dim": 2, "strict": True} in items
