import pytest
from hypothesis import given, strategies as st

from twinlab.fuchsian import FuchsianConfig, FuchsianUWord
from twinlab.gfield import field_new
from twinlab.nonlin import (NonlinWitness, build_vi, check_vi, certify_free_product,
                            certify_infinite_order, translated_roots, default_pair, witness_report)


def test_default_pair(fuchs23232):
    assert default_pair(fuchs23232) == (4, 1)
    same = FuchsianConfig(5, [field_new(2)]*5)
    with pytest.raises(ValueError):
        default_pair(same)


def test_adjacent_types_rejected(fuchs23232):
    with pytest.raises(ValueError):
        NonlinWitness(fuchs23232, 0, 1)


def test_invariants(fuchs23232):
    w = NonlinWitness(fuchs23232, N=3)
    assert all(w.invariants().values())


def test_build_vi(fuchs23232):
    assert len(build_vi(fuchs23232, 4, 0)) == 1          # one root group U_{a_i}, q - 1 = 1 letter
    assert len(build_vi(fuchs23232, 1, 0)) == 2
    rep = check_vi(fuchs23232, 1, 3)
    assert rep["order"] == rep["expected"] == 3**4
    assert rep["exponent_p"] and rep["commutative"]
    assert check_vi(fuchs23232, 4, 3)["exponent_p"]


def test_translated_roots_distinct():
    roots = translated_roots(5, 4, 6)
    assert len(set(roots)) == 7
    assert all(a.is_positive() for a in roots)


@pytest.mark.parametrize("L", [1, 2, 5])
def test_free_product_short(fuchs23232, L):
    w = NonlinWitness(fuchs23232, N=1, L=L)
    rep = certify_free_product(w)
    assert rep["passed"] and rep["collision_count"] == 0


def test_free_product_length8_depth0(fuchs23232):
    rep = certify_free_product(NonlinWitness(fuchs23232, N=0, L=8))
    assert rep["collision_count"] == 0 and rep["free_product_checked_to"] == 8


@given(st.integers(0, 1), st.integers(0, 2), st.integers(1, 2))
def test_infinite_order_any_nontrivial(fuchs23232, n, m, k):
    cfg = fuchs23232
    w = NonlinWitness(cfg, N=2)
    a, b = w.roots_i[n], w.roots_j[m]
    v = FuchsianUWord.letter(a, cfg.field(a).one)
    vp = FuchsianUWord.letter(b, cfg.field(b).units()[k - 1])
    rep = certify_infinite_order(w, v, vp, 12)
    assert rep["order_growth"] == list(range(2, 26, 2))
    assert rep["passed"]


def test_trivial_rejected(fuchs23232):
    w = NonlinWitness(fuchs23232)
    one = FuchsianUWord((), True)
    with pytest.raises(ValueError):
        certify_infinite_order(w, one, one)


def test_report(fuchs23232):
    rep = witness_report(fuchs23232, L=4, N=10, depth=0)
    assert rep["passed"] and rep["schema"] == "twinlab/1"
    assert rep["order_growth"] == [2*n for n in range(1, 11)]
    assert "not a proof" in rep["header"]
