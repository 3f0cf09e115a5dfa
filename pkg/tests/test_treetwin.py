import random

import pytest
from hypothesis import given, strategies as st

from twinlab.coxeter import TreeRoot, dinf_inv
from twinlab.treetwin import amalgam as am
from twinlab.treetwin.groups import verify_product_relation, branch_summary
from twinlab.treetwin.building import (Ball, build_ball, verify_trd, verify_rt2c, verify_moufang,
                                       uw_counts, commensurability_index, verify_faithfulness,
                                       w_distance, sequence_distance, bfs_distance,
                                       chamber_sequences, root_group, BudgetExceeded)
from twinlab.treetwin.twin import (verify_twin, verify_birkhoff, codistance,
                                   codistance_neg_pos)
from twinlab.treetwin.parahoric import (parahoric_restrict, apartment_order, crossed_type,
                                        exhaustion, verify_commensurability)


# ----------------------------------------------------------- Levi actions

def test_product_relation_exhaustive_gf2(tree22):
    rep = verify_product_relation(tree22, "exhaustive")
    assert rep["passed"], rep["failure"]
    cases, degenerate = branch_summary(rep["counts"])
    assert {c for c, _ in cases} == {1, 2, 3, 4, 5}
    assert {k for _, k in cases} == {"first", "second"}


def test_product_relation_sampled(tree23):
    rep = verify_product_relation(tree23, "sampled", samples=400, seed=3)
    assert rep["passed"], rep["failure"]


def test_exhaustive_guard():
    from twinlab.gfield import field_new
    from twinlab.treetwin import TreeConfig
    with pytest.raises(ValueError):
        verify_product_relation(TreeConfig(field_new(5), field_new(2)), "exhaustive")


# --------------------------------------------------------------- amalgam

@given(st.integers(0, 10**6))
def test_lambda_group_axioms(tree23, seed):
    cfg = tree23
    rng = random.Random(seed)
    x, y, z = (am.random_lambda(cfg, rng, nletters=2, length=2, radius=2) for _ in range(3))
    assert am.lambda_eq(am.lambda_mul(cfg, am.lambda_mul(cfg, x, y), z),
                        am.lambda_mul(cfg, x, am.lambda_mul(cfg, y, z)))
    assert am.is_identity(am.lambda_mul(cfg, x, am.lambda_inv(cfg, x)))
    assert am.is_identity(am.lambda_mul(cfg, am.lambda_inv(cfg, x), x))


def test_m_squared_is_torus(tree23):
    cfg = tree23
    for i in (0, 1):
        m = am.m_elem(cfg, i)
        mm = am.lambda_mul(cfg, m, m)
        assert not mm[0]          # lies in B


# ------------------------------------------------------------------ ball

def test_ball_frozen(tree23, tree22):
    b = Ball(tree23, 3)
    assert len(b) == 48
    assert b.is_tree()
    assert dict(b.valencies()) == {(0, 3): 10, (1, 4): 9}
    assert len(build_ball(tree22, 1)) == 5


def test_ball_json_and_dot_deterministic(tree22):
    a, b = build_ball(tree22, 2), build_ball(tree22, 2)
    assert a.to_json() == b.to_json() and a.to_dot() == b.to_dot()
    js = a.to_json()
    assert js["schema"] == "twinlab/1"
    assert {p["type"] for p in js["panels"]} == {0, 1}


def test_budget(tree23, monkeypatch):
    monkeypatch.setenv("TWINLAB_BUDGET_MB", "0.05")
    with pytest.raises(BudgetExceeded):
        chamber_sequences(tree23, 6)


def test_w_distance_three_ways(tree23):
    ball = Ball(tree23, 3)
    g = ball.chamber_graph()
    rng = random.Random(1)
    for _ in range(60):
        c, d = rng.choice(ball.chambers), rng.choice(ball.chambers)
        w = w_distance(tree23, c, d)
        assert w == sequence_distance(c, d) == bfs_distance(ball, c, d, g)


# ------------------------------------------------------ root datum axioms

def test_trd(tree23):
    rep = verify_trd(tree23, W=3)
    assert rep["passed"], rep["failures"]


def test_rt2c_and_moufang(tree23):
    assert verify_rt2c(tree23, W=2)["passed"]
    rep = verify_moufang(tree23, radius=3)
    assert rep["passed"] and rep["panels"] == 19


def test_root_group_sizes(tree23):
    for n in range(-2, 3):
        for d in (1, -1):
            a = TreeRoot(n, d)
            assert len(root_group(tree23, a)) == tree23.K[a.type].q


def test_uw_counts(tree23):
    assert uw_counts(tree23, maxlen=4)["passed"]


def test_commensurability(tree23, tree22):
    assert commensurability_index(tree23, (0,)) == 2
    assert commensurability_index(tree23, (1,)) == 3
    assert commensurability_index(tree23, (0, 1)) == 6
    assert verify_commensurability(tree22, maxlen=2)["passed"]


def test_faithfulness(tree23):
    assert verify_faithfulness(tree23, samples=3, radius=4)["passed"]


# ------------------------------------------------------------------ twin

def test_codistance_examples(tree22):
    one = am.identity(tree22)
    assert codistance(tree22, one, one) == ()
    assert codistance(tree22, am.m_elem(tree22, 0), one) == (0,)


def test_twin_axioms(tree22):
    rep = verify_twin(tree22, window=2)
    assert rep["passed"], rep["failures"]


def test_birkhoff_against_oracles(tree23):
    rep = verify_birkhoff(tree23, samples=60, seed=5)
    assert rep["passed"], rep["failures"]
    assert rep["stats"].get("search matched", 0) > 0


@given(st.integers(0, 10**6))
def test_codistance_symmetry(tree23, seed):
    "d*(y, x) = d*(x, y)^-1 for random group elements x, y"
    rng = random.Random(seed)
    x = am.random_lambda(tree23, rng, nletters=2, length=2, radius=2)
    y = am.random_lambda(tree23, rng, nletters=2, length=2, radius=2)
    assert codistance_neg_pos(tree23, y, x) == dinf_inv(codistance(tree23, x, y))


# ------------------------------------------------------------- parahoric

def test_apartment_order():
    assert apartment_order(("edge",), 3) == [(), (0,), (1,)]
    assert apartment_order(("vertex", 1), 2) == [(), (1,)]
    assert crossed_type(("vertex", 0), 1) is None
    with pytest.raises(ValueError):
        apartment_order(("face",), 2)


def test_exhaustion_sizes(tree23):
    assert len(exhaustion(tree23, ("edge",), 1)) == 1
    assert len(exhaustion(tree23, ("edge",), 3)) == 1 + 2 + 3


@pytest.mark.parametrize("F,n", [(("edge",), 1), (("edge",), 2), (("vertex", 0), 2), (("vertex", 1), 3)])
def test_parahoric_per_panel(tree23, F, n):
    rep = parahoric_restrict(tree23, F, n, samples=40, seed=1)
    assert rep["passed"]
    t = rep["crossed_type"]
    if t is not None:
        q = tree23.K[t].q
        assert all(q % o == 0 for o in rep["orders"])
