"""
Birkhoff decomposition and codistance for the twin tree.

Negative chambers are cosets g.B_- with B_- = T U_-; their representatives
are the products u_{-i1}(r1) m_{i1} u_{-i2}(r2) m_{i2} ... (alternating).
"""

import random
from collections import Counter

from twinlab import sl2kit
from twinlab.coxeter import simple_root, dinf_reduce, dinf_inv, positive_roots
from twinlab.treetwin.groups import (UPlusWord, BorelElem, TorusElem, torus_one,
                                     borel_mul, borel_one)
from twinlab.treetwin import amalgam as am
from twinlab.treetwin.building import root_group_elem, chamber_sequences


def _torus_j(cfg, j, lam):
    ls = [cfg.K[0].one, cfg.K[1].one]
    ls[j] = lam
    return BorelElem(TorusElem(*ls), UPlusWord())


def _uj(cfg, j, r):
    return BorelElem(torus_one(cfg), UPlusWord.letter(simple_root(j), r))


def sweep(cfg, h):
    """w with h in B_- n_w B_+, reading the coset letters of h left to right.

    The state is h_prefix = y n_w x with y in B_- (forgotten) and x in B_+.
    For the next letter c, x c = u_j(r) m_j b' and then
      w ends in j:          n_w u_j(r) m_j = (U_- part) n_{w s_j} t_j(-1)
      r = 0:                w -> w s_j
      r != 0:               u_j(r) m_j = u_-j(-1/r) t_j(-r) u_j(-1/r), and the
                            u_-j factor is pushed left through n_w into U_-."""
    w = []
    x = borel_one(cfg)
    steps = 0
    for j, r in h[0]:
        steps += 1
        if steps > 10**4:
            raise RuntimeError("sweep step budget exceeded")
        y = am.mul_p(cfg, am.LambdaWord((), x), j,
                     am.PElem(sl2kit.um(cfg.K[j], r), cfg.K[1 - j].one, UPlusWord()))
        (jj, rr), = y[0]
        b = y[1]
        if w and w[-1] == j:
            w.pop()
            x = borel_mul(_torus_j(cfg, j, -cfg.K[j].one), b)
        elif not rr:
            w.append(j)
            x = b
        else:
            x = borel_mul(borel_mul(_torus_j(cfg, j, -rr), _uj(cfg, j, -rr.inv())), b)
    return tuple(w)


def birkhoff_part(cfg, g):
    "w with g in U_+ w T U_-"
    return dinf_inv(sweep(cfg, am.lambda_inv(cfg, g)))


# ------------------------------------------------------------ negative chambers

def neg_letter(cfg, i, r):
    "u_{-a_i}(r) m_i"
    K = cfg.K[i]
    return am.from_sl2(cfg, i, sl2kit.sl2_mul(sl2kit.u_minus(K, r), sl2kit.m(K, K.one)))


def neg_chamber_elem(cfg, letters):
    g = am.identity(cfg)
    for i, r in letters:
        g = am.lambda_mul(cfg, g, neg_letter(cfg, i, r))
    return g


def codistance(cfg, x, y):
    "d*(x B_+, y B_-) for group elements x, y"
    return birkhoff_part(cfg, am.lambda_mul(cfg, am.lambda_inv(cfg, x), y))


def codistance_neg_pos(cfg, y, x):
    "d*(y B_-, x B_+), from the B_- side"
    return sweep(cfg, am.lambda_mul(cfg, am.lambda_inv(cfg, y), x))


def _neighbours(cfg, letters, i):
    "the other chambers of the type i panel of a chamber, as letter sequences"
    if letters and letters[-1][0] == i:
        key = letters[:-1]
        out = [key] + [key + ((i, r),) for r in cfg.K[i].elements()]
        return [L for L in out if L != letters]
    return [letters + ((i, r),) for r in cfg.K[i].elements()]


def verify_twin(cfg, window=3):
    """TW1-TW3 on all pairs (positive chamber, negative chamber) of length <= window.

    TW1  d*(y, x) = d*(x, y)^-1
    TW2  d*(x, y) = w, y' in the s-panel of y, l(ws) < l(w)  =>  d*(x, y') = ws
    TW3  for every s some y' in the s-panel of y has d*(x, y') = ws
    """
    pos = chamber_sequences(cfg, window)
    neg = chamber_sequences(cfg, window)
    pos_el = {L: am.chamber_elem(cfg, L) for L in pos}
    neg_cache = {}

    def negel(L):
        if L not in neg_cache:
            neg_cache[L] = neg_chamber_elem(cfg, L)
        return neg_cache[L]

    counts = Counter()
    failures = []
    for P in pos:
        x = pos_el[P]
        xinv = am.lambda_inv(cfg, x)
        for N in neg:
            y = negel(N)
            w = birkhoff_part(cfg, am.lambda_mul(cfg, xinv, y))
            counts["pairs"] += 1
            counts["opposite"] += (w == ())
            if codistance_neg_pos(cfg, y, x) != dinf_inv(w):
                failures.append(("TW1", P, N, w))
            for s in (0, 1):
                ws = dinf_reduce(w + (s,))
                shorter = len(ws) < len(w)
                found = False
                for N2 in _neighbours(cfg, N, s):
                    w2 = birkhoff_part(cfg, am.lambda_mul(cfg, xinv, negel(N2)))
                    if w2 == ws:
                        found = True
                    elif shorter:
                        failures.append(("TW2", P, N, N2, w, w2))
                    counts["TW2" if shorter else "TW3"] += 1
                if not found:
                    failures.append(("TW3", P, N, s, w))
            if len(failures) > 5:
                break
    return {"passed": not failures, "counts": dict(counts), "failures": failures[:5]}


# -------------------------------------------------------------- oracle

def negative_root_elems(cfg, W):
    out = []
    for i in (0, 1):
        for a in positive_roots(i, W):
            for k in cfg.field(a).units():
                out.append(root_group_elem(cfg, -a, k))
    return out


def u_minus_ball(cfg, W=2, length=2):
    "elements of U_- that are products of at most `length` window root elements"
    gens = negative_root_elems(cfg, W)
    seen = {am.identity(cfg).key(): am.identity(cfg)}
    frontier = list(seen.values())
    for _ in range(length):
        nxt = []
        for g in frontier:
            for s in gens:
                h = am.lambda_mul(cfg, g, s)
                k = h.key()
                if k not in seen:
                    seen[k] = h
                    nxt.append(h)
        frontier = nxt
    return list(seen.values())


def brute_birkhoff(cfg, g, ball):
    """Search Y in a U_- ball with g Y^-1 in U_+ n_w T; returns w or None.
    The Birkhoff cells are disjoint, so any hit determines w."""
    for Y in ball:
        z = am.lambda_mul(cfg, g, am.lambda_inv(cfg, Y))
        w = z.weyl()
        if dinf_reduce(w) != w:
            continue
        rest = am.lambda_mul(cfg, z, am.lambda_inv(cfg, am.n_word(cfg, w)))
        if not rest[0]:
            return w
    return None


def random_birkhoff_element(cfg, rng, maxlen=3):
    "x n_w t y with x in U_+, y in U_-, and the w it was built from"
    n = rng.randint(0, maxlen)
    i = rng.randint(0, 1)
    w = tuple((i + k) % 2 for k in range(n))
    x = am.from_borel(cfg, BorelElem(torus_one(cfg), am.random_uplus(cfg, rng, 2, 2)))
    t = am.from_borel(cfg, BorelElem(am.random_torus(cfg, rng), UPlusWord()))
    gens = negative_root_elems(cfg, 2)
    y = am.identity(cfg)
    for _ in range(rng.randint(0, 2)):
        y = am.lambda_mul(cfg, y, rng.choice(gens))
    g = am.lambda_mul(cfg, am.lambda_mul(cfg, am.lambda_mul(cfg, x, am.n_word(cfg, w)), t), y)
    return g, w


def verify_birkhoff(cfg, samples=1000, seed=0, W=2, length=2):
    """birkhoff_part against two oracles: elements built as x n_w t y with
    known w, and a bounded search over a U_- ball for arbitrary elements."""
    rng = random.Random(seed)
    ball = u_minus_ball(cfg, W, length)
    stats = Counter()
    failures = []
    for _ in range(samples):
        g, w = random_birkhoff_element(cfg, rng)
        got = birkhoff_part(cfg, g)
        stats["constructed"] += 1
        if got != w:
            failures.append(("constructed", g, w, got))
        h = am.random_lambda(cfg, rng, nletters=2, length=1, radius=1)
        got = birkhoff_part(cfg, h)
        found = brute_birkhoff(cfg, h, ball)
        if found is None:
            stats["search inconclusive"] += 1
        else:
            stats["search matched" if found == got else "search mismatch"] += 1
            if found != got:
                failures.append(("search", h, found, got))
    return {"passed": not failures, "stats": dict(stats), "failures": failures[:5],
            "ball": len(ball)}
