"""
Finite certificates behind the non-linearity of Fuchsian twin root data over
fields of different characteristics.

Take panel types i and j = i + 2 (parallel walls) with char K_i != char K_j.
The translation t_{i+1} = r_i r_{i+2} slides along the wall of a_{i+1}, and
a_i(n) = t_{i+1}^n . a_i is an increasing chain of roots, so the root groups
U_{a_i(n)} commute and generate V_i ~ K_i[X], of exponent p_i.  Cross pairs
a_i(n), a_j(m) are never prenilpotent, which makes V_i * V_j a free product.

These are finite checks only: that no homomorphism to a linear group is
injective is a theorem about all representations and is not verified here.
"""

from itertools import product

from twinlab.coxeter import polygon_simple_root, polygon_prenilpotent, nested
from twinlab.fuchsian.groups import FuchsianUWord

HEADER = ("finite certificate: free product of V_i, V_j up to the checked length, "
          "torsion of v, v', and growth of (vv')^n; this is evidence for the "
          "infinite order of vv', not a proof of non-linearity")


def translated_roots(r, i, N):
    "a_i(0..N) with a_i(n) = (r_i r_{i+2})^n a_i"
    a = polygon_simple_root(i, r)
    t = (i % r, (i + 2) % r)
    out = [a]
    for _ in range(N):
        out.append(out[-1].act(t))
    return out


class NonlinWitness(object):
    def __init__(self, cfg, i=None, j=None, N=1, L=8):
        r = cfg.r
        if i is None:
            i, j = default_pair(cfg)
        elif j is None:
            j = (i + 2) % r
        if (i - j) % r in (0, 1, r - 1):
            raise ValueError("types %d and %d do not give parallel walls" % (i, j))
        self.cfg, self.i, self.j, self.N, self.L = cfg, i, j, N, L
        self.roots_i = translated_roots(r, i, N)
        self.roots_j = translated_roots(r, j, N)

    def invariants(self):
        ri, rj = self.roots_i, self.roots_j
        chain = all(nested(a, b) and b.contains(a.chamber()) and a != b
                    for a, b in zip(ri, ri[1:])) and \
            all(nested(a, b) and b.contains(a.chamber()) and a != b for a, b in zip(rj, rj[1:]))
        inner = all(polygon_prenilpotent(a, b) for a in ri for b in ri) and \
            all(polygon_prenilpotent(a, b) for a in rj for b in rj)
        cross = not any(polygon_prenilpotent(a, b) for a in ri for b in rj)
        K = self.cfg.field(ri[0]).one, self.cfg.field(rj[0]).one
        noncomm = all((FuchsianUWord.letter(a, K[0])*FuchsianUWord.letter(b, K[1])).key() !=
                      (FuchsianUWord.letter(b, K[1])*FuchsianUWord.letter(a, K[0])).key()
                      for a in ri for b in rj)
        return {"increasing": chain, "pairwise_prenilpotent": inner, "cross_free": cross,
                "cross_noncommuting": noncomm}


def default_pair(cfg):
    "the first (i, i+2) with char K_i < char K_j, else with char K_i > char K_j"
    r = cfg.r
    pairs = [(i, (i + 2) % r) for i in range(r)]
    for i, j in pairs:
        if cfg.K[i].p < cfg.K[j].p:
            return i, j
    for i, j in pairs:
        if cfg.K[i].p != cfg.K[j].p:
            return i, j
    raise ValueError("no parallel panel types with different characteristics")


def build_vi(cfg, i, N):
    "letters generating V_i: every root group on a_i(0..N)"
    return [(a, k) for a in translated_roots(cfg.r, i, N) for k in cfg.field(a).units()]


def vi_elements(cfg, i, N):
    "all elements of the abelian group generated by build_vi"
    roots = translated_roots(cfg.r, i, N)
    K = cfg.K[i]
    out = []
    for ks in product(K.elements(), repeat=len(roots)):
        w = FuchsianUWord((), True)
        for a, k in zip(roots, ks):
            w = w*FuchsianUWord.letter(a, k)
        out.append(w)
    return out


def check_vi(cfg, i, N):
    "order, commutation and exponent p_i of V_i"
    els = vi_elements(cfg, i, N)
    keys = {x.key() for x in els}
    p = cfg.K[i].p
    exponent = all((x**p).key() == () for x in els)
    commute = all((x*y).key() == (y*x).key() for x in els[:20] for y in els[:20])
    return {"order": len(keys), "expected": cfg.K[i].q**(N + 1),
            "exponent_p": exponent, "commutative": commute}


def certify_free_product(w, L=None):
    """All alternating products of nontrivial V_i and V_j syllables, up to L
    syllables, have pairwise distinct normal forms."""
    L = w.L if L is None else L
    cfg = w.cfg
    Vi = [x for x in vi_elements(cfg, w.i, w.N) if x]
    Vj = [x for x in vi_elements(cfg, w.j, w.N) if x]
    seen = {(): 0}
    collisions = 0
    words = 1
    for start in (0, 1):
        frontier = [FuchsianUWord((), True)]
        for n in range(L):
            syl = (Vi, Vj)[(start + n) % 2]
            nxt = []
            for u in frontier:
                for s in syl:
                    x = u*s
                    k = x.key()
                    words += 1
                    if k in seen:
                        collisions += 1
                    else:
                        seen[k] = n + 1
                    nxt.append(x)
            frontier = nxt
    return {"header": HEADER, "free_product_checked_to": L, "words": words,
            "collision_count": collisions, "depth": w.N,
            "syllables": (len(Vi), len(Vj)), "passed": collisions == 0}


def syllable_length(u, roots_i, roots_j):
    si, sj = set(roots_i), set(roots_j)
    n = 0
    last = None
    for a, _ in u:
        side = 0 if a in si else 1 if a in sj else None
        if side is None:
            raise ValueError("letter outside V_i and V_j")
        if side != last:
            n += 1
            last = side
    return n


def certify_infinite_order(w, v, vp, N=50):
    """syllable length of (v v')^n for n <= N, expected 2n, plus v^p_i = 1
    and v'^p_j = 1"""
    if not v or not vp:
        raise ValueError("v and v' must be nontrivial")
    cfg = w.cfg
    lengths = []
    x = FuchsianUWord((), True)
    vvp = v*vp
    for n in range(1, N + 1):
        x = x*vvp
        lengths.append(syllable_length(x, w.roots_i, w.roots_j))
    pi, pj = cfg.K[w.i].p, cfg.K[w.j].p
    exp = {"v^%d" % pi: (v**pi).key() == (), "v'^%d" % pj: (vp**pj).key() == ()}
    ok = lengths == [2*n for n in range(1, N + 1)] and all(exp.values())
    return {"header": HEADER, "order_growth": lengths, "exponent_checks": exp, "passed": ok}


def witness_report(cfg, L=8, N=50, depth=1):
    w = NonlinWitness(cfg, N=depth, L=L)
    fp = certify_free_product(w)
    a, b = w.roots_i[0], w.roots_j[0]
    v = FuchsianUWord.letter(a, cfg.field(a).one)
    vp = FuchsianUWord.letter(b, cfg.field(b).one)
    io = certify_infinite_order(w, v, vp, N)
    vi = check_vi(cfg, w.i, depth)
    vj = check_vi(cfg, w.j, depth)
    return {
        "schema": "twinlab/1",
        "header": HEADER,
        "types": [w.i, w.j],
        "fields": [cfg.K[w.i].spec(), cfg.K[w.j].spec()],
        "invariants": w.invariants(),
        "free_product_checked_to": fp["free_product_checked_to"],
        "collision_count": fp["collision_count"],
        "words_checked": fp["words"],
        "order_growth": io["order_growth"],
        "exponent_checks": dict(io["exponent_checks"],
                                V_i=vi["exponent_p"], V_j=vj["exponent_p"]),
        "passed": fp["passed"] and io["passed"] and vi["exponent_p"] and vj["exponent_p"]
                  and all(w.invariants().values()),
    }
