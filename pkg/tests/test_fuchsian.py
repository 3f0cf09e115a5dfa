import random

import pytest
from hypothesis import given, strategies as st

from twinlab.coxeter import polygon_positive_roots, polygon_prenilpotent
from twinlab.fuchsian import (FuchsianUWord, verify_fuchsian_product_relation,
                              classify_window, uw_subgroup, gamma_gen, gamma_one, gamma_order,
                              commuting_pairs, GammaWord, FuchsianBall, build_fuchsian_ball,
                              local_structure, verify_loops, verify_growth)
from twinlab.fuchsian.groups import generator_window, coverage, GTYPES
from twinlab.render import base_polygon, chamber_outline, invert, ball_svg, apartment_svg


ROOTS = polygon_positive_roots(5, 2)


# ------------------------------------------------------------------ U+

def _word(cfg, rng, n=4):
    w = FuchsianUWord((), True)
    for _ in range(n):
        a = rng.choice(ROOTS)
        w = w*FuchsianUWord.letter(a, rng.choice(cfg.field(a).units()))
    return w


@given(st.integers(0, 10**6))
def test_uplus_group_axioms(fuchs23232, seed):
    cfg = fuchs23232
    rng = random.Random(seed)
    x, y, z = (_word(cfg, rng) for _ in range(3))
    assert ((x*y)*z).key() == (x*(y*z)).key()
    assert (x*x.inverse()).key() == ()


@given(st.sampled_from(ROOTS), st.sampled_from(ROOTS))
def test_commutation_iff_prenilpotent(fuchs23232, a, b):
    "right-angled: prenilpotent root groups commute, the others are free"
    cfg = fuchs23232
    x = FuchsianUWord.letter(a, cfg.field(a).one)
    y = FuchsianUWord.letter(b, cfg.field(b).one)
    assert ((x*y).key() == (y*x).key()) == (polygon_prenilpotent(a, b) or a == b)


def test_letter_exponent(fuchs23232):
    cfg = fuchs23232
    for a in ROOTS[:10]:
        x = FuchsianUWord.letter(a, cfg.field(a).one)
        assert (x**cfg.field(a).p).key() == ()


@pytest.mark.parametrize("w", [(0,), (0, 2), (1, 3, 0), (0, 1, 3)])
def test_uw_subgroup(fuchs23232, w):
    size, expect, closed = uw_subgroup(fuchs23232, w)
    assert size == expect and closed


# ----------------------------------------------------------- Levi actions

def test_generator_window_has_all_types(fuchs23232):
    gens = generator_window(fuchs23232, 0, 2)
    assert {g.gtype() for g in gens} == set(GTYPES.values())


def test_product_relation_one_vertex(fuchs23232):
    rep = verify_fuchsian_product_relation(fuchs23232, "exhaustive", panels=[1])
    assert rep["passed"], rep["failure"]
    assert len(coverage(rep["counts"])) == 2*5*4


def test_product_relation_sampled(fuchs23232):
    rep = verify_fuchsian_product_relation(fuchs23232, "sampled", samples=300, seed=9)
    assert rep["passed"], rep["failure"]


def test_geometric_classification():
    rep = classify_window(5, 0, 2)
    assert rep["passed"] and rep["roots"] == 38 and not rep["anomalies"]


# ---------------------------------------------------------------- lattice

@pytest.mark.parametrize("q", [2, 3])
def test_gamma_presentation(q):
    r = 5
    for i in range(r):
        assert gamma_order(gamma_gen(r, q, i)) == q + 1
    assert commuting_pairs(r, q) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(1, 2)), max_size=8))
def test_gamma_normal_form(letters):
    g = GammaWord(letters, 5, 2)
    assert (g*g.inverse()) == gamma_one(5, 2)
    assert GammaWord(g.letters, 5, 2) == g
    # no two adjacent syllables of the same type survive
    assert all(a[0] != b[0] for a, b in zip(g.letters, g.letters[1:]))


def test_ball_counts_frozen():
    assert len(FuchsianBall(5, 2, 1)) == 1 + 5*2
    assert len(FuchsianBall(5, 2, 2)) == 71
    assert len(FuchsianBall(5, 3, 2)) == 151
    assert len(FuchsianBall(5, 2, 0).base_panels()) == 5


def test_links_and_growth():
    b = FuchsianBall(5, 2, 2)
    rep = b.links_complete_bipartite()
    assert rep["passed"] and rep["vertices"] == 5
    assert verify_growth(5, 2, 4)["passed"]
    assert verify_growth(6, 3, 3)["passed"]


def test_simply_transitive():
    "left multiplication by a generator permutes chambers with no fixed point"
    b = FuchsianBall(5, 3, 2)
    for i in range(5):
        g = gamma_gen(5, 3, i)
        assert all(g*x != x for x in b.chambers)


def test_loops_contract():
    rep = verify_loops(5, 2, 6)
    assert rep["passed"] and rep["loops"] > 0


def test_unequal_thickness_rejected(F2, F3):
    with pytest.raises(ValueError):
        build_fuchsian_ball(5, 2, 1, fields=[F2, F3, F2, F3, F2])


def test_local_structure(F2, F3):
    loc = local_structure([F2, F3, F2, F3, F2])
    assert [L["link"] for L in loc["links"]] == ["K_{3,4}", "K_{4,3}", "K_{3,4}", "K_{4,3}", "K_{3,3}"]
    assert loc["projective_lines"]
    assert not local_structure([2, 2, 6, 2, 2])["projective_lines"]


# ----------------------------------------------------------------- render

def test_disk_geometry():
    for r in (5, 6, 8):
        verts, mirrors = base_polygon(r)
        for j, (c, R) in enumerate(mirrors):
            assert abs(abs(c)**2 - R*R - 1) < 1e-9              # orthogonal to the boundary
            assert abs(abs(verts[j] - c) - R) < 1e-9
            c2, R2 = mirrors[(j + 1) % r]
            assert abs(abs(c - c2)**2 - R*R - R2*R2) < 1e-9     # right angles


def test_inversion_is_involution():
    _, mirrors = base_polygon(5)
    z = 0.1 + 0.2j
    for M in mirrors:
        assert abs(invert(invert(z, M), M) - z) < 1e-12
    assert max(abs(z) for z in chamber_outline((0, 2, 4, 1), 5)) < 1


def test_svg_deterministic():
    b = FuchsianBall(5, 2, 2)
    s = ball_svg(b)
    assert s == ball_svg(FuchsianBall(5, 2, 2))
    assert s.startswith("<svg") and s.count("<polygon") == 1 + 5 + 15
    assert "white" not in apartment_svg(5, 1, {(): 1, (0,): 2, (1,): 2, (2,): 2, (3,): 2, (4,): 2})
