"""
U+ = A_0 * A_1, the Borel group B = T x| U+, and the Levi actions on U^i.

A_i is the direct sum of the root groups of the positive roots containing a_i,
so a word of U+ is an alternating sequence of blocks, each block a finite
map root -> nonzero scalar.
"""

import random
from collections import Counter
from functools import lru_cache

from twinlab.coxeter import simple_root, block_of, positive_roots
from twinlab import sl2kit
from twinlab.sl2kit import BOREL


class TreeConfig(object):
    def __init__(self, K0, K1):
        self.K = (K0, K1)

    @property
    def q(self):
        return (self.K[0].q, self.K[1].q)

    @property
    def q_min(self):
        return min(self.q)

    @property
    def q_max(self):
        return max(self.q)

    def field(self, a):
        return self.K[a[0] % 2]

    def __repr__(self):
        return "TreeConfig(%s, %s)" % self.K

    def __eq__(self, other):
        return isinstance(other, TreeConfig) and self.K[0] is other.K[0] and self.K[1] is other.K[1]

    def __hash__(self):
        return hash((id(self.K[0]), id(self.K[1])))


class TorusElem(tuple):
    "(lambda_0, lambda_1) in K_0^x x K_1^x"
    __slots__ = ()

    def __new__(cls, l0, l1):
        if not l0 or not l1:
            raise ValueError("torus entries must be nonzero")
        return tuple.__new__(cls, (l0, l1))

    def __mul__(self, other):
        return TorusElem(self[0]*other[0], self[1]*other[1])

    def inverse(self):
        return TorusElem(self[0].inv(), self[1].inv())

    def is_identity(self):
        return self[0] == self[0].ctx.one and self[1] == self[1].ctx.one

    def key(self):
        return (self[0].v, self[1].v)


def torus_one(cfg):
    return TorusElem(cfg.K[0].one, cfg.K[1].one)


def _merge(sup1, sup2):
    d = dict(sup1)
    for a, k in sup2:
        if a in d:
            s = d[a] + k
            if s:
                d[a] = s
            else:
                del d[a]
        else:
            d[a] = k
    return tuple(sorted(d.items(), key=lambda ak: ak[0].sort_key()))


class UPlusWord(tuple):
    """Alternating blocks ((i, ((root, k), ...)), ...), roots of block i in P(a_i)."""
    __slots__ = ()

    def __new__(cls, blocks=()):
        return tuple.__new__(cls, blocks)

    @staticmethod
    def letter(a, k):
        if not k:
            return UPlusWord()
        return UPlusWord(((block_of(a), ((a, k),)),))

    @staticmethod
    def from_letters(letters):
        u = UPlusWord()
        for a, k in letters:
            u = uplus_mul(u, UPlusWord.letter(a, k))
        return u

    def letters(self):
        return [ak for _, sup in self for ak in sup]

    def inverse(self):
        return UPlusWord(tuple((i, tuple((a, -k) for a, k in sup)) for i, sup in reversed(self)))

    def __mul__(self, other):
        return uplus_mul(self, other)

    def is_identity(self):
        return len(self) == 0

    def key(self):
        return tuple((i, tuple((a, k.v) for a, k in sup)) for i, sup in self)

    def __repr__(self):
        if not self:
            return "1"
        return "*".join("A%d{%s}" % (i, ", ".join("%r:%s" % (a, k) for a, k in sup)) for i, sup in self)


def uplus_mul(u, v):
    left = list(u)
    right = list(v)
    while left and right and left[-1][0] == right[0][0]:
        i = left[-1][0]
        sup = _merge(left.pop()[1], right.pop(0)[1])
        if sup:
            left.append((i, sup))
            break
    return UPlusWord(tuple(left) + tuple(right))


def torus_act(t, u):
    """t u t^-1: multiply k on U_a by lambda_{type a}^(2 eps_a)"""
    out = []
    for i, sup in u:
        out.append((i, tuple((a, k*t[a[0] % 2]**(2*a.eps)) for a, k in sup)))
    return UPlusWord(tuple(out))


class BorelElem(tuple):
    "t.u with t a TorusElem and u a UPlusWord"
    __slots__ = ()

    def __new__(cls, t, u):
        return tuple.__new__(cls, (t, u))

    t = property(lambda self: self[0])
    u = property(lambda self: self[1])

    def __mul__(self, other):
        return borel_mul(self, other)

    def inverse(self):
        t, u = self
        return BorelElem(t.inverse(), torus_act(t, u.inverse()))

    def is_identity(self):
        return self[0].is_identity() and not self[1]

    def key(self):
        return (self[0].key(), self[1].key())


def borel_one(cfg):
    return BorelElem(torus_one(cfg), UPlusWord())


def borel_mul(x, y):
    t, u = x
    s, v = y
    return BorelElem(t*s, uplus_mul(torus_act(s.inverse(), u), v))


# ------------------------------------------------------------ U^i generators
#
# A generator of U^i is a triple (a, k, c):
#   first type   u_i(c) u_a(k) u_i(c)^-1   a in P(a_{1-i}), c in K_i
#   second type  u_a(k)                    a in P(a_i) - {a_i}, c = None

def gen_kind(i, a):
    return 1 if block_of(a) != i else 2


def gen_word(i, g):
    a, k, c = g
    if c is None or not c:
        return UPlusWord.letter(a, k)
    ai = simple_root(i)
    return UPlusWord.letter(ai, c) * UPlusWord.letter(a, k) * UPlusWord.letter(ai, -c)


def act_u(i, s, g):
    a, k, c = g
    if c is None:
        return g
    return (a, k, c + s)


def act_t(i, lam, g):
    "t_i(lam)"
    a, k, c = g
    if a[0] % 2 == i:
        k = k*lam**(2*a.eps)
    if c is not None:
        c = lam*lam*c
    return (a, k, c)


def act_tau(i, tau, g):
    "t_{1-i}(tau): only the scalar of a type 1-i root moves"
    a, k, c = g
    if a[0] % 2 != i:
        k = k*tau**(2*a.eps)
    return (a, k, c)


def act_m(i, lam, g, trace=None):
    a, k, c = g
    delta = a[0] % 2 == i
    if c is not None and c:
        if trace is not None:
            trace.append("*")
        if delta:
            k = k*(-lam/c)**(2*a.eps)
        return (a, k, -lam*lam/c)
    if trace is not None:
        trace.append("0" if c is not None else "-")
    if delta:
        k = k*lam**(-2*a.eps)
    b = a.reflect(i)
    if block_of(b) != i:
        return (b, k, lam.ctx.zero)
    return (b, k, None)


def levi_act(g, i, x, trace=None):
    """g x g^-1 for g in SL_2(K_i) and x a generator of U^i.

    g is split into letters u(r) t(l) or u(r) m(l) u(r'), which act right to left.
    """
    if g.cell == BOREL:
        return act_u(i, g.r, act_t(i, g.lam, x))
    y = act_u(i, g.r2, x)
    y = act_m(i, g.lam, y, trace)
    return act_u(i, g.r, y)


@lru_cache(maxsize=500000)
def _levi_cached(gkey, ctxid, i, x):
    g = _SL2_BY_KEY[(ctxid, gkey)]
    return levi_act(g, i, x)


_SL2_BY_KEY = {}


def levi_act_cached(g, i, x):
    k = (id(g.ctx), g.key())
    if k not in _SL2_BY_KEY:
        _SL2_BY_KEY[k] = g
    return _levi_cached(g.key(), id(g.ctx), i, x)


def decompose(i, u, Ki):
    """u = u_i(c) . x with x in U^i given as a list of generators; returns (c, gens).

    Running sums of the a_i scalars give the conjugators: the prefix up to a
    letter u_a(k) equals (generators so far) . u_i(c_prefix)."""
    ai = simple_root(i)
    c = Ki.zero
    raw = []
    for a, k in u.letters():
        if a == ai:
            c = c + k
        elif gen_kind(i, a) == 1:
            raw.append((a, k, c))
        else:
            raw.append((a, k, None))
    gens = [(a, k, cj - c) if cj is not None else (a, k, None) for a, k, cj in raw]
    return c, gens


def gens_word(i, gens):
    u = UPlusWord()
    for g in gens:
        u = u * gen_word(i, g)
    return u


def adjoint(i, g, tau, x, Ki):
    """(g tau) x (g tau)^-1 for g in SL_2(K_i), tau in K_{1-i}^x and x in U^i."""
    c, gens = decompose(i, x, Ki)
    if c:
        raise ValueError("word is not in U^%d" % i)
    out = UPlusWord()
    one = tau.ctx.one
    for gen in gens:
        y = levi_act_cached(g, i, gen)
        if tau != one:
            y = act_tau(i, tau, y)
        out = out * gen_word(i, y)
    return out


# ---------------------------------------------------------- product relation

def generator_window(cfg, i, radius):
    "generators of U^i on roots within the radius, every scalar and conjugator"
    Ki = cfg.K[i]
    out = []
    for a in positive_roots(1 - i, radius):
        for k in cfg.field(a).units():
            for c in Ki.elements():
                out.append((a, k, c))
    for a in positive_roots(i, radius):
        if a == simple_root(i):
            continue
        for k in cfg.field(a).units():
            out.append((a, k, None))
    return out


def verify_product_relation(cfg, mode="exhaustive", samples=2000, seed=0, radius=3):
    """Check g(h v h^-1)g^-1 = (gh) v (gh)^-1 for the action of SL_2(K_i) on
    the generators of U^i, i = 0, 1, and that it commutes with the K_{1-i}^x
    factor.  Counts are kept per (side, product case, generator type,
    branch), where branch records for each m letter met whether the
    conjugating parameter was nonzero '*', zero '0' or absent '-'."""
    if mode == "exhaustive" and max(cfg.q) > 3:
        raise ValueError("exhaustive mode needs q0, q1 <= 3")
    rng = random.Random(seed)
    counts = Counter()
    checks = 0
    failure = None
    for i in (0, 1):
        Ki = cfg.K[i]
        els = sl2kit.sl2_elements(Ki)
        gens = generator_window(cfg, i, radius)
        if mode == "exhaustive":
            triples = ((g, h, v) for g in els for h in els for v in gens)
        else:
            triples = ((rng.choice(els), rng.choice(els), rng.choice(gens)) for _ in range(samples))
        for g, h, v in triples:
            checks += 1
            trace = []
            hv = levi_act(h, i, v, trace)
            lhs = levi_act(g, i, hv, trace)
            gh = sl2kit.sl2_mul(g, h)
            rhs = levi_act(gh, i, v)
            kind = "first" if v[2] is not None else "second"
            counts[(i, sl2kit.product_case(g, h), kind, "".join(trace))] += 1
            if lhs != rhs and failure is None:
                failure = {"side": i, "g": repr(g), "h": repr(h), "v": repr(v),
                           "lhs": repr(lhs), "rhs": repr(rhs)}
        tau_set = cfg.K[1 - i].units()
        for g in els:
            for tau in tau_set:
                for v in gens:
                    checks += 1
                    a = act_tau(i, tau, levi_act(g, i, v))
                    b = levi_act(g, i, act_tau(i, tau, v))
                    if a != b and failure is None:
                        failure = {"side": i, "g": repr(g), "tau": repr(tau), "v": repr(v),
                                   "commutation": [repr(a), repr(b)]}
            if mode != "exhaustive":
                break
    return {"passed": failure is None, "checks": checks, "counts": counts, "failure": failure}


def branch_summary(counts):
    """Group the counters of verify_product_relation by (case, type) and list
    the named degenerate branches met in the big.big case."""
    cases = Counter()
    for (i, case, kind, br), n in counts.items():
        cases[(case, kind)] += n
    degenerate = Counter()
    for (i, case, kind, br), n in counts.items():
        if case == 1 and kind == "first":
            if br.startswith("0"):
                degenerate["S=0"] += n
            elif br == "*0":
                degenerate["R-mu^2/S=0"] += n
            else:
                degenerate["generic"] += n
    return cases, degenerate
