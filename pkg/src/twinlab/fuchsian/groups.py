"""
U+, B and the Levi actions for the right-angled Fuchsian building I_{r,1+q}
with one field per panel type.

U+ is the graph product of the root groups U_a (a positive) over the
prenilpotency graph: prenilpotent pairs commute, the others generate a free
product.  Words are kept reduced and in Foata normal form.
"""

import random
from collections import Counter
from itertools import product

from twinlab import sl2kit
from twinlab.sl2kit import BOREL
from twinlab.coxeter import (PolygonRoot, polygon_simple_root, polygon_prenilpotent,
                             polygon_positive_roots, polygon_ball, polygon_phi, _check_rank)
from twinlab.graphprod import insert_right, foata_normal


class FuchsianConfig(object):
    def __init__(self, r, fields):
        _check_rank(r)
        fields = tuple(fields)
        if len(fields) != r:
            raise ValueError("need %d fields, got %d" % (r, len(fields)))
        self.r = r
        self.K = fields

    def field(self, a):
        return self.K[a.type]

    @property
    def q(self):
        return tuple(k.q for k in self.K)

    def __repr__(self):
        return "FuchsianConfig(r=%d, %s)" % (self.r, ",".join(k.spec() for k in self.K))


def _commutes(a, b):
    return polygon_prenilpotent(a, b)


def _combine(k, l):
    s = k + l
    return s if s else None


class FuchsianUWord(tuple):
    """Foata normal form of a reduced word ((root, k), ...)."""
    __slots__ = ()

    def __new__(cls, letters=(), canonical=False):
        if not canonical:
            letters = reduce_letters(letters)
        return tuple.__new__(cls, tuple(letters))

    @staticmethod
    def letter(a, k):
        if not k:
            return FuchsianUWord((), True)
        if not a.is_positive():
            raise ValueError("%r is not a positive root" % (a,))
        return FuchsianUWord(((a, k),), True)

    def __mul__(self, other):
        return fuchsian_umul(self, other)

    def inverse(self):
        return FuchsianUWord(tuple((a, -k) for a, k in reversed(self)))

    def key(self):
        return tuple((a, k.v) for a, k in self)

    def __pow__(self, n):
        out = FuchsianUWord((), True)
        for _ in range(n):
            out = out*self
        return out

    def __repr__(self):
        if not self:
            return "1"
        return "*".join("u[%r](%s)" % (a, k) for a, k in self)


def reduce_letters(letters, start=()):
    word = list(start)
    for a, k in letters:
        word = insert_right(word, a, k, _commutes, _combine)
    return foata_normal(word, _commutes, PolygonRoot.sort_key)


def fuchsian_umul(u, v):
    return FuchsianUWord(reduce_letters(v, start=u), True)


def fuchsian_torus_act(t, u):
    """t u t^-1 for t = (lambda_0, ..., lambda_{r-1})"""
    return FuchsianUWord(tuple((a, k*t[a.type]**(2*a.eps)) for a, k in u), True)


# ------------------------------------------------------------ generators
#
# A generator of U^{i,i+1} is (v, t, a, k), standing for
#     u_i(v) u_{i+1}(t) u_a(k) u_{i+1}(t)^-1 u_i(v)^-1,
# where v is present (possibly 0) iff a is not prenilpotent with a_i and t is
# present iff a is not prenilpotent with a_{i+1}.

GTYPES = {(True, True): "first", (True, False): "second",
          (False, True): "third", (False, False): "fourth"}


def free_with(a, j, r):
    return not polygon_prenilpotent(a, polygon_simple_root(j, r))


def gen_type(a, i, r):
    return GTYPES[(free_with(a, i, r), free_with(a, (i + 1) % r, r))]


class UGenerator(tuple):
    __slots__ = ()

    def __new__(cls, v, t, a, k):
        return tuple.__new__(cls, (v, t, a, k))

    v = property(lambda self: self[0])
    t = property(lambda self: self[1])
    a = property(lambda self: self[2])
    k = property(lambda self: self[3])

    def gtype(self):
        return GTYPES[(self[0] is not None, self[1] is not None)]

    def key(self):
        v, t, a, k = self
        return (None if v is None else v.v, None if t is None else t.v, a, k.v)


def make_generator(cfg, i, a, k, v=None, t=None):
    "fill in zero conjugators where the root needs them"
    r = cfg.r
    v = (cfg.K[i].zero if v is None else v) if free_with(a, i, r) else None
    j = (i + 1) % r
    t = (cfg.K[j].zero if t is None else t) if free_with(a, j, r) else None
    return UGenerator(v, t, a, k)


def generator_word(cfg, i, x):
    "the generator as an element of U+"
    v, t, a, k = x
    j = (i + 1) % cfg.r
    ai, aj = polygon_simple_root(i, cfg.r), polygon_simple_root(j, cfg.r)
    L = FuchsianUWord.letter
    w = L(a, k)
    if t:
        w = L(aj, t)*w*L(aj, -t)
    if v:
        w = L(ai, v)*w*L(ai, -v)
    return w


def check_generator(cfg, i, x):
    v, t, a, k = x
    r = cfg.r
    if not a.is_positive() or a in (polygon_simple_root(i, r), polygon_simple_root(i + 1, r)):
        raise ValueError("malformed generator %r" % (x,))
    if (v is not None) != free_with(a, i, r) or (t is not None) != free_with(a, (i + 1) % r, r):
        raise ValueError("conjugators of %r do not match the root" % (x,))


def _side(cfg, i, s):
    "slot 0 for the SL_2(K_i) factor, 1 for SL_2(K_{i+1})"
    return 0 if s == i % cfg.r else 1


def act_u(cfg, i, s, r, x):
    "u_s(r)"
    x = list(x)
    slot = _side(cfg, i, s)
    if x[slot] is not None:
        x[slot] = x[slot] + r
    return UGenerator(*x)


def act_t(cfg, i, s, lam, x):
    "t_s(lam), any s in Z/r"
    v, t, a, k = x
    if a.type == s % cfg.r:
        k = k*lam**(2*a.eps)
    if s % cfg.r == i % cfg.r and v is not None:
        v = lam*lam*v
    if s % cfg.r == (i + 1) % cfg.r and t is not None:
        t = lam*lam*t
    return UGenerator(v, t, a, k)


def act_m(cfg, i, s, lam, x, trace=None):
    "m_s(lam), s in {i, i+1}"
    r = cfg.r
    slot = _side(cfg, i, s)
    x = list(x)
    c = x[slot]
    a, k = x[2], x[3]
    delta = a.type == s % r
    if c is not None and c:
        if trace is not None:
            trace.append("*")
        if delta:
            k = k*(-lam/c)**(2*a.eps)
        x[slot] = -lam*lam/c
        x[3] = k
        return UGenerator(*x)
    if trace is not None:
        trace.append("0" if c is not None else "-")
    if delta:
        k = k*lam**(-2*a.eps)
    b = a.act((s % r,))
    x[2], x[3] = b, k
    x[slot] = cfg.K[s % r].zero if free_with(b, s, r) else None
    return UGenerator(*x)


def fuchsian_levi_act(cfg, i, s, g, x, trace=None):
    """g x g^-1 for g in SL_2(K_s), s in {i, i+1}, x a generator of U^{i,i+1}.
    The letters of the Bruhat form act right to left."""
    if g.cell == BOREL:
        return act_u(cfg, i, s, g.r, act_t(cfg, i, s, g.lam, x))
    y = act_u(cfg, i, s, g.r2, x)
    y = act_m(cfg, i, s, g.lam, y, trace)
    return act_u(cfg, i, s, g.r, y)


def generator_window(cfg, i, maxlen=2):
    """every generator of U^{i,i+1} on roots w.a_j with l(w) <= maxlen, all
    scalars and conjugators"""
    r = cfg.r
    out = []
    skip = {polygon_simple_root(i, r), polygon_simple_root(i + 1, r)}
    j = (i + 1) % r
    for a in polygon_positive_roots(r, maxlen):
        if a in skip:
            continue
        vs = cfg.K[i].elements() if free_with(a, i, r) else [None]
        ts = cfg.K[j].elements() if free_with(a, j, r) else [None]
        for v, t, k in product(vs, ts, cfg.field(a).units()):
            out.append(UGenerator(v, t, a, k))
    return out


def verify_fuchsian_product_relation(cfg, mode="exhaustive", samples=3000, seed=0,
                                     maxlen=2, panels=None):
    """For each vertex type (i, i+1): the product relation for both SL_2
    factors on every generator type, commutation of the two factors with each
    other and with the outer torus factors t_j, and agreement of the u and t
    actions with conjugation inside U+."""
    r = cfg.r
    if mode == "exhaustive" and max(cfg.q) > 3:
        raise ValueError("exhaustive mode needs every q_i <= 3")
    rng = random.Random(seed)
    counts = Counter()
    checks = Counter()
    failure = None
    panels = range(r) if panels is None else panels
    for i in panels:
        j = (i + 1) % r
        gens = generator_window(cfg, i, maxlen)
        els = {s: sl2kit.sl2_elements(cfg.K[s]) for s in (i, j)}
        for s in (i, j):
            E = els[s]
            if mode == "exhaustive":
                triples = ((g, h, x) for g in E for h in E for x in gens)
            else:
                triples = ((rng.choice(E), rng.choice(E), rng.choice(gens)) for _ in range(samples))
            for g, h, x in triples:
                trace = []
                lhs = fuchsian_levi_act(cfg, i, s, g, fuchsian_levi_act(cfg, i, s, h, x, trace), trace)
                rhs = fuchsian_levi_act(cfg, i, s, sl2kit.sl2_mul(g, h), x)
                checks["product"] += 1
                counts[("factor %s" % ("i" if s == i else "i+1"), sl2kit.product_case(g, h),
                        x.gtype())] += 1
                if lhs != rhs and failure is None:
                    failure = {"check": "product", "i": i, "s": s, "g": repr(g), "h": repr(h),
                               "x": repr(x), "lhs": repr(lhs), "rhs": repr(rhs)}
        # the two factors commute
        Gi = els[i] if mode == "exhaustive" else rng.sample(els[i], min(6, len(els[i])))
        Gj = els[j] if mode == "exhaustive" else rng.sample(els[j], min(6, len(els[j])))
        xs = gens if mode == "exhaustive" else rng.sample(gens, min(60, len(gens)))
        for g, h, x in product(Gi, Gj, xs):
            a = fuchsian_levi_act(cfg, i, i, g, fuchsian_levi_act(cfg, i, j, h, x))
            b = fuchsian_levi_act(cfg, i, j, h, fuchsian_levi_act(cfg, i, i, g, x))
            checks["factors commute"] += 1
            if a != b and failure is None:
                failure = {"check": "factors commute", "i": i, "g": repr(g), "h": repr(h), "x": repr(x)}
        # outer torus factors commute with both SL_2 actions
        for l in range(r):
            if l in (i, j):
                continue
            for lam in cfg.K[l].units():
                for s in (i, j):
                    for g in (els[s] if mode == "exhaustive" else Gi if s == i else Gj):
                        for x in xs:
                            a = act_t(cfg, i, l, lam, fuchsian_levi_act(cfg, i, s, g, x))
                            b = fuchsian_levi_act(cfg, i, s, g, act_t(cfg, i, l, lam, x))
                            checks["torus commute"] += 1
                            if a != b and failure is None:
                                failure = {"check": "torus commute", "i": i, "l": l, "x": repr(x)}
        # u_s and t_s act as honest conjugation in B
        for x in xs:
            w = generator_word(cfg, i, x)
            for s in (i, j):
                a_s = polygon_simple_root(s, r)
                for c in cfg.K[s].units():
                    lhs = FuchsianUWord.letter(a_s, c)*w*FuchsianUWord.letter(a_s, -c)
                    rhs = generator_word(cfg, i, act_u(cfg, i, s, c, x))
                    checks["u in B"] += 1
                    if lhs.key() != rhs.key() and failure is None:
                        failure = {"check": "u in B", "i": i, "s": s, "x": repr(x)}
                    lam = [K.one for K in cfg.K]
                    lam[s] = c
                    lhs = fuchsian_torus_act(lam, w)
                    rhs = generator_word(cfg, i, act_t(cfg, i, s, c, x))
                    checks["t in B"] += 1
                    if lhs.key() != rhs.key() and failure is None:
                        failure = {"check": "t in B", "i": i, "s": s, "x": repr(x)}
    return {"passed": failure is None, "checks": dict(checks), "counts": counts, "failure": failure}


def coverage(counts):
    "(factor, case, type) triples met, as a set"
    return {key for key, n in counts.items() if n}


# ------------------------------------------------ geometric classification

def _sector(x, i, r):
    "which of Q, s_{i+1}Q, s_iQ, s_is_{i+1}Q contains the chamber x"
    ai, aj = polygon_simple_root(i, r), polygon_simple_root(i + 1, r)
    return {(True, True): "Q", (True, False): "s(i+1)Q",
            (False, True): "s(i)Q", (False, False): "s(i)s(i+1)Q"}[(ai.contains(x), aj.contains(x))]


def wall_sectors(a, i, radius):
    """sectors met by chambers adjacent to the wall of a, inside a ball"""
    r = a.r
    from twinlab.coxeter import _reduce
    out = set()
    for level in polygon_ball(r, radius):
        for x in level:
            if not a.contains(x):
                continue
            for s in range(r):
                y = _reduce(x + (s,), r)
                if not a.contains(y):
                    out.add(_sector(x, i, r))
                    out.add(_sector(y, i, r))
    return frozenset(out)


GEOMETRIC = {
    frozenset(["Q"]): "first",
    frozenset(["s(i+1)Q"]): "second",
    frozenset(["Q", "s(i+1)Q"]): "second",
    frozenset(["s(i)Q"]): "third",
    frozenset(["Q", "s(i)Q"]): "third",
    frozenset(["s(i)s(i+1)Q"]): "fourth",
    frozenset(["s(i+1)Q", "s(i)s(i+1)Q"]): "fourth",
    frozenset(["s(i)Q", "s(i)s(i+1)Q"]): "fourth",
}


def classify_window(r, i=0, maxlen=2, radius=None):
    """Compare the wall-position classification of generators with the
    prenilpotency one on the positive roots of a window.  Roots whose wall
    position matches none of the listed cases are reported as anomalies."""
    rows = []
    for a in polygon_positive_roots(r, maxlen):
        if a in (polygon_simple_root(i, r), polygon_simple_root(i + 1, r)):
            continue
        R = radius or len(a[0]) + 4
        sec = wall_sectors(a, i, R)
        geo = GEOMETRIC.get(sec)
        rows.append((a, sorted(sec), geo, gen_type(a, i, r)))
    anomalies = [row for row in rows if row[2] is None]
    disagree = [row for row in rows if row[2] is not None and row[2] != row[3]]
    return {"roots": len(rows), "anomalies": anomalies, "disagreements": disagree,
            "passed": not disagree,
            "counts": Counter(row[3] for row in rows)}


def uw_subgroup(cfg, w):
    """all words supported on Phi_{w^-1}; returns (size, closed under products)"""
    roots = polygon_phi(w, cfg.r)
    elems = {FuchsianUWord((), True).key(): FuchsianUWord((), True)}
    for a in roots:
        new = {}
        for u in elems.values():
            for k in cfg.field(a).elements():
                x = u*FuchsianUWord.letter(a, k)
                new[x.key()] = x
        elems = new
    expect = 1
    for a in roots:
        expect *= cfg.field(a).q
    vals = list(elems.values())
    closed = True
    rng = random.Random(len(vals))
    for _ in range(min(200, len(vals)**2)):
        x = rng.choice(vals)*rng.choice(vals)
        if x.key() not in elems:
            closed = False
            break
    return len(elems), expect, closed
