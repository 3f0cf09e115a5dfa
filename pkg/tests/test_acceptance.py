"""
The ten acceptance criteria.  Each test adds one PASS/FAIL line to the
"acceptance criteria" section of the pytest summary.

Criteria 6 and 8 have literal forms that do not hold: r(r-2)^(n-1) is only
a majorant of the growth, and "order divides q_max" fails when the two panel
fields have different characteristics.  The literal forms run as strict
xfails that print FAIL; the corrected statements run next to them.

Run with  pytest tests/test_acceptance.py -v  or  python tests/test_acceptance.py
"""

import time

import pytest

from twinlab import sl2kit
from twinlab.gfield import field_new
from twinlab.coxeter import (growth_series, growth_bound, polygon_ball, covolume, covolume_bound,
                             covolume_partial, covolume_tail, Divergent)
from twinlab.treetwin import TreeConfig
from twinlab.treetwin.groups import verify_product_relation, branch_summary
from twinlab.treetwin.building import Ball, verify_trd, verify_moufang, commensurability_index
from twinlab.treetwin.twin import verify_twin, verify_birkhoff
from twinlab.treetwin.parahoric import parahoric_restrict, commensurability_orbit
from twinlab.coxeter import dinf_words
from twinlab.fuchsian import (FuchsianConfig, verify_fuchsian_product_relation, gamma_gen,
                              gamma_order, commuting_pairs, FuchsianBall)
from twinlab.fuchsian.groups import coverage, GTYPES
from twinlab.nonlin import NonlinWitness, certify_free_product, certify_infinite_order, FuchsianUWord

F2, F3, F4, F5 = field_new(2), field_new(3), field_new(2, 2), field_new(5)


def test_criterion_1_sl2(acceptance):
    t = time.time()
    bad = []
    pairs = 0
    for K in (F2, F3, F4, F5):
        o = sl2kit.sl2_oracle_check(K)
        r = sl2kit.sl2_relation_suite(K)
        pairs += o["checks"]
        if not (o["passed"] and r["passed"]):
            bad.append((K.spec(), o["failure"] or r["failure"]))
    dt = time.time() - t
    ok = not bad and dt < 5
    acceptance(1, ok, "sl2_mul = matrix product on %d pairs over GF(2,3,4,5), relations hold, "
                      "%.2fs (limit 5s)" % (pairs, dt))
    assert ok, bad


def test_criterion_2_tree_product_relation(acceptance):
    t = time.time()
    details = []
    ok = True
    for cfg in (TreeConfig(F2, F3), TreeConfig(F2, F2)):
        rep = verify_product_relation(cfg, "exhaustive")
        cases, degenerate = branch_summary(rep["counts"])
        covered = {(c, k) for c, k in cases} == {(c, k) for c in range(1, 6) for k in ("first", "second")}
        branches = degenerate["S=0"] > 0 and degenerate["R-mu^2/S=0"] > 0
        ok = ok and rep["passed"] and covered and branches
        details.append("%s/%s: %d checks" % (cfg.K[0].spec(), cfg.K[1].spec(), rep["checks"]))
    dt = time.time() - t
    ok = ok and dt < 60
    acceptance(2, ok, "5 cases x 2 generator types, S=0 and R-mu^2/S=0 branches met, 0 counterexamples "
                      "(%s), %.1fs (limit 60s)" % ("; ".join(details), dt))
    assert ok


def test_criterion_3_fuchsian_product_relation(acceptance):
    t = time.time()
    cfg = FuchsianConfig(5, [F2, F3, F2, F3, F2])
    rep = verify_fuchsian_product_relation(cfg, "exhaustive")
    cov = coverage(rep["counts"])
    full = {(f, c, g) for f in ("factor i", "factor i+1") for c in range(1, 6) for g in GTYPES.values()}
    dt = time.time() - t
    ok = rep["passed"] and cov == full and rep["checks"]["factors commute"] > 0 and dt < 300
    acceptance(3, ok, "r=5 fields (2,3,2,3,2): %d/40 (factor, case, type) cells, %s, "
                      "0 counterexamples, %.1fs (limit 300s)"
               % (len(cov & full), ", ".join("%s %d" % kv for kv in sorted(rep["checks"].items())), dt))
    assert ok, rep["failure"]


def test_criterion_4_trd(acceptance):
    cfg = TreeConfig(F2, F3)
    trd = verify_trd(cfg, W=4)
    ball = Ball(cfg, 3)
    val = dict(ball.valencies())
    valency_ok = {size for (i, size) in val} == {3, 4} and all(size == 1 + cfg.q[i] for i, size in val)
    mouf = verify_moufang(cfg, radius=3)
    ok = trd["passed"] and valency_ok and ball.is_tree() and mouf["passed"]
    acceptance(4, ok, "TRD0-TRD4 at W=4 (%s), valencies %s, acyclic=%s, Moufang at %d panels"
               % (", ".join("%s %d" % kv for kv in sorted(trd["checks"].items())), val,
                  ball.is_tree(), mouf["panels"]))
    assert ok


def test_criterion_5_twin(acceptance):
    cfg = TreeConfig(F2, F2)
    tw = verify_twin(cfg, window=3)
    bk = verify_birkhoff(cfg, samples=1000, seed=0)
    matched = bk["stats"].get("search matched", 0)
    ok = tw["passed"] and bk["passed"] and matched >= 1000
    acceptance(5, ok, "TW1-TW3 on %d pairs (window 3); birkhoff_part = oracle on %d/%d random "
                      "elements (%d constructed)" % (tw["counts"]["pairs"], matched, 1000,
                                                     bk["stats"]["constructed"]))
    assert ok


@pytest.mark.xfail(strict=True, reason="r(r-2)^(n-1) is only an upper bound for n >= 3; the "
                                       "exact series converges for q = r-2")
def test_criterion_6_literal(acceptance):
    bfs = [len(level) for level in polygon_ball(5, 6)]
    formula = growth_bound(5, 6)
    cov3, cov4 = covolume(5, 3), covolume(5, 4)
    ok = bfs == formula and cov3 is Divergent and cov4 == 6
    acceptance(6, ok, "literal: d_n = r(r-2)^(n-1) gives %s but enumeration gives %s; "
                      "covolume(5,3) = %s (not divergent), covolume(5,4) = %s (not 6)"
               % (formula, bfs, cov3, cov4))
    assert ok


def test_criterion_6_corrected(acceptance):
    rows = []
    for r in (5, 6):
        growth_series(r, 6, check=True)                        # raises on mismatch with BFS
        rows.append(growth_series(r, 6))
    d = rows[0]
    exact = covolume(5, 3) == 16 and covolume(5, 4) == 5
    tails = all(covolume_partial(5, q, 30) + covolume_tail(5, q, 30) == covolume(5, q) for q in (3, 4))
    majorant = covolume_bound(5, 3) is Divergent and covolume_bound(5, 4) == 6
    ok = d[2] == 15 and d[3] == 40 and exact and tails and majorant
    acceptance(6, ok, "corrected: d_n = (r-2)d_(n-1) - d_(n-2) matches BFS for r=5,6, n<=6 "
                      "(r=5: %s); covolume(5,3)=16, covolume(5,4)=5, partial sums + exact tail "
                      "at N=30 agree; majorant series gives divergent / 6" % d)
    assert ok


def test_criterion_7_commensurability(acceptance):
    cfg = TreeConfig(F2, F2)
    rows = [(w, commensurability_index(cfg, w), commensurability_orbit(cfg, w)) for w in dinf_words(2)]
    ok = all(a == b for _, a, b in rows) and commensurability_index(cfg, (0,)) == cfg.q[0]
    acceptance(7, ok, "index = orbit count for l(w) <= 2: %s; index(s0) = q0 = %d"
               % (", ".join("%s:%d" % (w, a) for w, a, _ in rows), cfg.q[0]))
    assert ok


def _parahoric_runs():
    cfg = TreeConfig(F2, F3)
    runs = []
    for F in (("vertex", 0), ("vertex", 1), ("edge",)):
        for n in (1, 2, 3):
            runs.append(parahoric_restrict(cfg, F, n, samples=120, seed=n))
    return runs


@pytest.mark.xfail(strict=True, reason="with fields of different characteristics, kernels at "
                                       "type 0 panels have order 2, which does not divide q_max = 3")
def test_criterion_8_literal(acceptance):
    runs = _parahoric_runs()
    samples = sum(r["samples"] for r in runs)
    literal = sum(r["q_max_violations"] for r in runs)
    acceptance(8, literal == 0, "literal: %d of %d sampled kernel orders do not divide q_max = 3 "
                                "(order-2 elements at type 0 crossings)" % (literal, samples))
    assert literal == 0


def test_criterion_8_per_panel(acceptance):
    runs = _parahoric_runs()
    samples = sum(r["samples"] for r in runs)
    viol = sum(r["violations"] for r in runs)
    orders = sorted({o for r in runs for o in r["orders"]})
    ok = viol == 0 and samples >= 1000
    acceptance(8, ok, "per panel: %d samples over 3 facets x n<=3, orders %s, 0 of them fail "
                      "'p-power dividing q of the crossed panel' (%d violations)"
               % (samples, orders, viol))
    assert ok


def test_criterion_9_bourdon(acceptance):
    r = 5
    ok = True
    notes = []
    for q in (2, 3):
        orders = {gamma_order(gamma_gen(r, q, i)) for i in range(r)}
        pairs = commuting_pairs(r, q)
        b1 = FuchsianBall(r, q, 1)
        b2 = FuchsianBall(r, q, 3)
        links = b2.links_complete_bipartite()
        this = (orders == {q + 1} and pairs == sorted(tuple(sorted((i, (i + 1) % r))) for i in range(r))
                and len(b1) == 1 + r*q and links["passed"] and links["vertices"] > 0)
        ok = ok and this
        notes.append("q=%d: ord %s, commuting %s, |B1|=%d, %d interior links K_{%d,%d}"
                     % (q, orders, pairs, len(b1), links["vertices"], q + 1, q + 1))
    acceptance(9, ok, "; ".join(notes))
    assert ok


def test_criterion_10_nonlinearity(acceptance):
    cfg = FuchsianConfig(5, [F2, F3, F2, F3, F2])
    w = NonlinWitness(cfg, N=1, L=8)
    fp = certify_free_product(w)
    a, b = w.roots_i[0], w.roots_j[0]
    v = FuchsianUWord.letter(a, cfg.field(a).one)
    vp = FuchsianUWord.letter(b, cfg.field(b).one)
    io = certify_infinite_order(w, v, vp, 50)
    torsion = (v*v).key() == () and (vp*vp*vp).key() == ()
    growth = io["order_growth"] == [2*n for n in range(1, 51)]
    ok = fp["collision_count"] == 0 and fp["free_product_checked_to"] == 8 and growth and torsion
    acceptance(10, ok, "types (%d,%d) over GF(2)/GF(3): %d alternating words up to length 8, "
                       "%d collisions; (vv')^n lengths 2..%d for n<=50; v^2 = v'^3 = 1: %s"
               % (w.i, w.j, fp["words"], fp["collision_count"], io["order_growth"][-1], torsion))
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
