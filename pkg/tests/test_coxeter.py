import pytest
from hypothesis import given, strategies as st

from twinlab.coxeter import (TreeRoot, PLUS, MINUS, tree_eps, simple_root, tree_phi, dinf_reduce,
                             dinf_words, dinf_chamber, positive_roots, tree_prenilpotent,
                             polygon_reduce, polygon_simple_root, polygon_prenilpotent,
                             polygon_prenilpotent_window, polygon_phi, polygon_positive_roots,
                             polygon_ball, walls_orthogonal, nested,
                             growth_series, growth_bound, covolume, covolume_bound,
                             covolume_partial, covolume_tail, Divergent, growth_rate)


# ---------------------------------------------------------------- tree

def test_eps_frozen():
    assert [tree_eps(n) for n in range(-4, 6)] == [1, -1, -1, 1, 1, 1, 1, -1, -1, 1]


def test_simple_roots():
    assert simple_root(0) == TreeRoot(0, PLUS)
    assert simple_root(1) == TreeRoot(1, MINUS)
    assert simple_root(0).is_positive() and simple_root(1).is_positive()
    assert not (-simple_root(0)).is_positive()


def test_phi_example():
    assert tree_phi((0, 1)) == [TreeRoot(0, PLUS), TreeRoot(-1, PLUS)]
    assert tree_phi((1,)) == [TreeRoot(1, MINUS)]


@given(st.lists(st.integers(0, 1), max_size=12))
def test_dinf_reduce(word):
    w = dinf_reduce(tuple(word))
    assert all(a != b for a, b in zip(w, w[1:]))
    assert len(w) % 2 == len(word) % 2
    assert dinf_reduce(w) == w


@given(st.integers(0, 8))
def test_phi_size_is_length(n):
    for w in dinf_words(n):
        phi = tree_phi(w)
        assert len(phi) == len(w)
        k = dinf_chamber(w)
        assert all(a.is_positive() and not a.contains_chamber(k) for a in phi)


def test_positive_roots_nested_within_block():
    roots = positive_roots(0, 4) + positive_roots(1, 4)
    for a in roots:
        for b in roots:
            assert tree_prenilpotent(a, b) == (a.d == b.d)


# ---------------------------------------------------------------- polygon

def _red(w):
    return polygon_reduce(w, 5).letters


def test_shortlex():
    assert _red((1, 0)) == (0, 1)
    assert _red((2, 0)) == (2, 0)
    assert _red((0, 0)) == ()
    assert _red((0, 1, 0)) == (1,)
    assert _red((4, 0)) == (0, 4)


@given(st.lists(st.integers(0, 4), max_size=10))
def test_reduce_idempotent_and_involutive(word):
    w = _red(tuple(word))
    assert _red(w) == w
    assert _red(w + tuple(reversed(w))) == ()
    assert len(w) <= len(word)


def test_simple_root_pairs():
    r = 5
    for i in range(r):
        a, b, c = (polygon_simple_root(k % r, r) for k in (i, i + 1, i + 2))
        assert walls_orthogonal(a, b) and polygon_prenilpotent(a, b)
        assert not polygon_prenilpotent(a, c)


ROOTS = polygon_positive_roots(5, 2)


def test_root_count_frozen():
    assert len(ROOTS) == 40


@given(st.sampled_from(ROOTS), st.sampled_from(ROOTS))
def test_prenilpotent_exact_matches_window(a, b):
    assert polygon_prenilpotent(a, b) == polygon_prenilpotent_window(a, b)
    assert polygon_prenilpotent(a, b) == polygon_prenilpotent(b, a)
    assert polygon_prenilpotent(a, -a) is False or a == -a


@given(st.sampled_from(ROOTS), st.sampled_from(ROOTS))
def test_nested_implies_prenilpotent(a, b):
    if nested(a, b):
        assert polygon_prenilpotent(a, b)


def test_polygon_phi():
    for level in polygon_ball(5, 3):
        for w in level:
            phi = polygon_phi(w, 5)
            assert len(phi) == len(w)
            assert all(a.is_positive() and not a.contains(w) for a in phi)


# ---------------------------------------------------------------- growth

def test_growth_frozen():
    assert growth_series(5, 6, check=True) == [1, 5, 15, 40, 105, 275, 720]
    assert growth_series(6, 6, check=True)[:4] == [1, 6, 24, 90]
    assert growth_bound(5, 3) == [1, 5, 15, 45]


def test_growth_below_majorant():
    for r in (5, 6, 7):
        d, b = growth_series(r, 8), growth_bound(r, 8)
        assert d[:3] == b[:3]
        assert all(x < y for x, y in zip(d[3:], b[3:]))


def test_covolume_values():
    assert covolume(5, 3) == 16
    assert covolume(5, 4) == 5
    assert covolume(6, 4) == 25
    assert covolume(7, 4) is Divergent
    assert covolume_bound(5, 3) is Divergent
    assert covolume_bound(5, 4) == 6


@pytest.mark.parametrize("r,q", [(5, 3), (5, 4), (6, 5), (7, 9)])
def test_partial_plus_tail_is_exact(r, q):
    for N in (1, 5, 30):
        assert covolume_partial(r, q, N) + covolume_tail(r, q, N) == covolume(r, q)
    gap = covolume(r, q) - covolume_partial(r, q, 30)
    assert 0 < gap < 10*covolume(r, q)*(growth_rate(r)/q)**30


def test_rank_check():
    with pytest.raises(ValueError):
        growth_series(4, 3)
