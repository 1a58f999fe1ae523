import pytest

from bincurve.brill_noether import (BNQuery, MartensPrediction, abel_sample,
                                    assemble_Wbar, bn_enumerate, bn_suite,
                                    clifford_index,
                                    clifford_zero_classification,
                                    estimate_dim, martens_bound,
                                    merge_reports, predicted_empty,
                                    reduce_curve_mod, rho, split_ranges)
from bincurve.bundles import canonical_bundle, hyperelliptic_class
from bincurve.cohomology import h0
from bincurve.curve import (BinaryCurve, ProjPoint, random_curve,
                            random_hyperelliptic_curve, standard_curve)
from bincurve.fields import PrimeField, Rationals
from bincurve.picard import balanced_set
from bincurve.rng import Rng

F7 = PrimeField(7)
F11 = PrimeField(11)


def test_rho_formula():
    assert rho(3, 3, 1) == 1
    assert rho(4, 2, 1) == -2
    assert rho(3, 4, 2) == 0
    assert rho(2, 2, 0) == 2


def test_query_validation_and_json():
    q = BNQuery((1, 2), 1)
    assert q.to_json() == {"md": [1, 2], "r": 1}
    with pytest.raises(ValueError):
        BNQuery((1, 2), -1)


def test_counts_nest_in_r():
    X = random_curve(3, F7, Rng(14))
    counts = [bn_enumerate(X, BNQuery((2, 2), r)).count for r in range(4)]
    assert counts == sorted(counts, reverse=True)
    # d = 2g-2: chi = 2 forces h0 >= 2 everywhere, and r = 2 only at omega
    assert counts[0] == counts[1] == 216
    assert counts[2] == 1 and counts[3] == 0


def test_witness_cap_and_witnesses_have_sections():
    X = standard_curve(3, F7)
    rep = bn_enumerate(X, BNQuery((2, 2), 0), witness_cap=5)
    assert len(rep.witnesses) == 5 and rep.count >= 5
    from bincurve.bundles import LineBundle
    for c in rep.witnesses:
        assert h0(LineBundle(X, (2, 2), list(c))) >= 1


def test_serre_count_bijection():
    """L -> w x L^-1 matches #W^r_md with #W^r'_md' for the dual data."""
    X = random_curve(2, F7, Rng(15))
    g, md, r = 2, (1, 0), 0
    d = sum(md)
    md_dual = (g - 1 - md[0], g - 1 - md[1])
    r_dual = r - d + g - 1
    n = bn_enumerate(X, BNQuery(md, r)).count
    m = bn_enumerate(X, BNQuery(md_dual, r_dual)).count
    assert n == m


def test_sharding_matches_single_scan():
    X = random_curve(3, F7, Rng(16))
    q = BNQuery((1, 1), 1)
    whole = bn_enumerate(X, q, witness_cap=8)
    ranges = split_ranges(216, 5)
    assert ranges[0][0] == 0 and ranges[-1][1] == 216
    assert all(a2 == b1 for (_, b1), (a2, _) in zip(ranges, ranges[1:]))
    parts = [bn_enumerate(X, q, witness_cap=8, index_range=rg) for rg in ranges]
    merged = merge_reports(parts)
    assert merged.count == whole.count
    assert merged.witnesses == whole.witnesses
    assert merged.index_range == (0, 216)


def test_merge_rejects_gaps():
    X = random_curve(3, F7, Rng(16))
    q = BNQuery((1, 1), 1)
    a = bn_enumerate(X, q, index_range=(0, 50))
    b = bn_enumerate(X, q, index_range=(60, 216))
    with pytest.raises(ValueError):
        merge_reports([a, b])


def test_predicted_empty_cases():
    # case (i): negative part (balance then forces d <= g, hence d <= g+r)
    assert predicted_empty((-1, 3), 1, 3)
    assert predicted_empty((-1, 2), 0, 3)
    assert predicted_empty((-1, 3), 0, 3)
    # case (ii): small nonnegative part and d <= g+r-1
    assert predicted_empty((0, 3), 1, 3)
    assert predicted_empty((1, 2), 2, 3)            # d1=1 <= r-1, d=3 <= 4
    assert not predicted_empty((1, 2), 1, 3)
    assert not predicted_empty((2, 2), 2, 3)        # d=4 > g+r-1 fails? equal
    assert not predicted_empty((2, 3), 2, 3)        # d=5 > g+r-1=4
    # unsorted input is normalized
    assert predicted_empty((3, 0), 1, 3)
    with pytest.raises(ValueError):
        predicted_empty((-2, 5), 1, 3)              # not balanced


def test_predicted_empty_agrees_with_scan():
    X = random_curve(3, F7, Rng(17))
    for d in range(0, 4):
        for md in balanced_set(d, 3):
            for r in (0, 1, 2):
                if predicted_empty(md, r, 3):
                    assert bn_enumerate(X, BNQuery(md, r)).count == 0


def test_clifford_index_hyperelliptic_vs_generic():
    H = standard_curve(3, F7)
    rep = clifford_index(H)
    assert rep.cliff == 0 and rep.md == (1, 1)
    X = random_curve(3, F7, Rng(18))
    rep2 = clifford_index(X)  # non-hyperelliptic g=3 has no qualifying class
    assert rep2.cliff is None
    assert rep2.to_json()["cliff"] == "undefined"
    g2 = standard_curve(2, F7)
    assert clifford_index(g2).cliff == 0


def test_clifford_zero_classification():
    X = standard_curve(3, F7)
    for d in (0, 2, 4):
        rep = clifford_zero_classification(X, d)
        assert rep.passed and rep.n_found == 1
    with pytest.raises(ValueError):
        clifford_zero_classification(X, 3)   # odd degree
    Xn = random_curve(3, F7, Rng(19))
    with pytest.raises(ValueError):
        clifford_zero_classification(Xn, 2)  # not hyperelliptic


def test_martens_bound_window():
    assert martens_bound(4, (1, 2), 1, hyperelliptic=True).kind == "exact"
    assert martens_bound(4, (1, 2), 1, hyperelliptic=True).value == 1
    assert martens_bound(4, (1, 2), 1, hyperelliptic=False).kind == "le"
    assert martens_bound(4, (1, 2), 1, hyperelliptic=False).value == 0
    assert martens_bound(4, (0, 3), 1, True).kind == "empty"
    # 2r = d degenerates to dimension zero, still inside the window
    assert martens_bound(4, (1, 1), 1, True) == MartensPrediction("exact", 0)
    with pytest.raises(ValueError):
        martens_bound(4, (2, 3), 1, True)    # d = 5 > g-1
    with pytest.raises(ValueError):
        martens_bound(4, (1, 2), 0, True)    # r must be positive


def test_reduce_curve_mod():
    X = standard_curve(3, Rationals())
    Xp = reduce_curve_mod(X, 11)
    assert Xp.ctx == PrimeField(11) and Xp.genus == 3
    # nodes 0,1,2,oo collide mod small p... 2 = 9 mod 7 stays fine, but a
    # curve with nodes 0 and 7 degenerates mod 7
    ctx = Rationals()
    pts = [ProjPoint.finite(ctx, ctx.from_int(v)) for v in (0, 7)]
    pts.append(ProjPoint.infinity(ctx))
    bad = BinaryCurve(ctx, [(p, p) for p in pts])
    with pytest.raises(ValueError, match="bad reduction"):
        reduce_curve_mod(bad, 7)
    with pytest.raises(ValueError):
        reduce_curve_mod(Xp, 11)  # only rational-coefficient curves reduce


def test_estimate_dim_verdicts():
    X = standard_curve(3, Rationals())
    est = estimate_dim(X, BNQuery((1, 1), 1), (7, 11))
    assert est.kind == "ok" and est.rounded == 0 and est.residual == 0.0
    est2 = estimate_dim(X, BNQuery((0, 2), 1), (7, 11))
    assert est2.kind == "empty"
    with pytest.raises(ValueError):
        estimate_dim(X, BNQuery((1, 1), 1), (7,))  # needs two primes


def test_abel_degree_one_never_moves():
    X = random_curve(2, F7, Rng(20))
    for md in ((1, 0), (0, 1)):
        stats = abel_sample(X, md, Rng(21), 60)
        assert stats.pencil_free == stats.trials
        assert stats.fraction == 1.0
        assert stats.histogram == {1: 60}
    with pytest.raises(ValueError):
        abel_sample(X, (2, 1), Rng(1), 5)   # d must stay <= g


def test_abel_degree_two_on_hyperelliptic_sees_the_pencil():
    X = random_hyperelliptic_curve(3, F11, Rng(22))
    stats = abel_sample(X, (1, 1), Rng(23), 80)
    assert set(stats.histogram) <= {1, 2}
    assert stats.histogram.get(2, 0) >= 1   # conjugate pairs do land


def test_assemble_wbar_window_and_ell0():
    X = standard_curve(2, F7)
    rep = assemble_Wbar(X, 1, 0)
    assert rep.picard_type == "degeneration"
    assert rep.ell0_excluded is True and rep.ell0_h0 == 0
    assert rep.total > 0
    with pytest.raises(ValueError):
        assemble_Wbar(X, 3, 1)   # d > r+g-1


def test_wbar_neron_type_has_no_ell0_fields():
    X = standard_curve(2, F7)
    rep = assemble_Wbar(X, 2, 1)
    assert rep.picard_type == "neron"
    assert rep.ell0_h0 is None and rep.ell0_excluded is None


def test_bn_suite_is_deterministic_and_shaped():
    rep = bn_suite(3, 1, [7], 10, seed=4, mds=[(1, 2)])
    rep2 = bn_suite(3, 1, [7], 10, seed=4, mds=[(1, 2)])
    assert rep.to_json() == rep2.to_json()
    assert rep.rows[0].n_curves == 10
    assert rep.rows[0].verdict in ("pass", "fail", "report")
    with pytest.raises(ValueError):
        bn_suite(6, 1, [7], 5, seed=1)      # desk-scale guard
    with pytest.raises(ValueError):
        bn_suite(3, 1, [17], 5, seed=1)


def test_canonical_is_unique_rho_zero_witness():
    X = random_curve(3, F7, Rng(24))
    rep = bn_enumerate(X, BNQuery((2, 2), 2), witness_cap=2)
    w = canonical_bundle(X)
    assert rep.count == 1 and rep.witnesses[0] == w.c


def test_hyperelliptic_locus_witness():
    X = random_hyperelliptic_curve(4, F7, Rng(25))
    rep = bn_enumerate(X, BNQuery((1, 1), 1), witness_cap=2)
    H = hyperelliptic_class(X)
    assert rep.count == 1 and rep.witnesses[0] == H.c
