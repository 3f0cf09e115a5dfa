"""
SL_2 over a small field, kept in Bruhat normal form.

    u(r)  = [[1, r], [0, 1]]          u_(r) = [[1, 0], [-r, 1]]
    t(l)  = [[l, 0], [0, 1/l]]        m(l)  = u_(1/l) u(l) u_(1/l) = [[0, l], [-1/l, 0]]

Borel elements are u(r) t(l); big cell elements are u(r) m(l) u(r').
Products are computed with the five case formulas, never with matrices;
matrices are only an oracle.
"""

from itertools import product

from twinlab.gfield import FieldError

BOREL = "B"
BIG = "N"


class Sl2Elem(object):
    __slots__ = ("ctx", "cell", "r", "lam", "r2")

    def __init__(self, ctx, cell, r, lam, r2=None):
        if not lam:
            raise ValueError("lambda must be nonzero")
        self.ctx = ctx
        self.cell = cell
        self.r = ctx(r)
        self.lam = ctx(lam)
        self.r2 = ctx(r2) if cell == BIG else None

    @property
    def is_borel(self):
        return self.cell == BOREL

    def key(self):
        if self.cell == BOREL:
            return (BOREL, self.r.v, self.lam.v)
        return (BIG, self.r.v, self.lam.v, self.r2.v)

    def __eq__(self, other):
        return isinstance(other, Sl2Elem) and self.ctx is other.ctx and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __mul__(self, other):
        return sl2_mul(self, other)

    def __repr__(self):
        if self.cell == BOREL:
            return "u(%s)t(%s)" % (self.r, self.lam)
        return "u(%s)m(%s)u(%s)" % (self.r, self.lam, self.r2)

    def matrix(self):
        return to_matrix(self)

    def inverse(self):
        return sl2_inv(self)


def u(ctx, r):
    return Sl2Elem(ctx, BOREL, r, ctx.one)


def t(ctx, lam):
    return Sl2Elem(ctx, BOREL, ctx.zero, lam)


def m(ctx, lam=1):
    return Sl2Elem(ctx, BIG, ctx.zero, lam, ctx.zero)


def um(ctx, r):
    "coset representative u(r) m(1)"
    return Sl2Elem(ctx, BIG, r, ctx.one, ctx.zero)


def u_minus(ctx, r):
    r = ctx(r)
    return sl2_from_matrix(ctx.one, ctx.zero, -r, ctx.one)


def identity(ctx):
    return Sl2Elem(ctx, BOREL, ctx.zero, ctx.one)


def to_matrix(g):
    "the 2x2 matrix (a, b, c, d) of g"
    r, l = g.r, g.lam
    if g.cell == BOREL:
        return (l, r/l, g.ctx.zero, l.inv())
    r2 = g.r2
    return (-r/l, l - r*r2/l, -l.inv(), -r2/l)


def sl2_from_matrix(a, b, c, d):
    ctx = a.ctx
    a, b, c, d = ctx(a), ctx(b), ctx(c), ctx(d)
    if a*d - b*c != ctx.one:
        raise ValueError("determinant is not 1")
    if not c:
        return Sl2Elem(ctx, BOREL, a*b, a)
    return Sl2Elem(ctx, BIG, a/c, -c.inv(), d/c)


def sl2_mul(g, h):
    """Bruhat form of gh by the five case formulas.

    big.big with S = r'+s != 0:  u(r - l^2/S) m(-l mu/S) u(s' - mu^2/S)
    big.big with S = 0:          u(r + l^2 mu^-2 s') t(-l/mu)
    borel.big:                   u(r + l^2 s) m(l mu) u(s')
    big.borel:                   u(r) m(l/mu) u(mu^-2 (r' + s))
    borel.borel:                 u(r + l^2 s) t(l mu)
    """
    if g.ctx is not h.ctx:
        raise FieldError("mixed fields: %s and %s" % (g.ctx, h.ctx))
    ctx = g.ctx
    r, l = g.r, g.lam
    s, mu = h.r, h.lam
    if g.cell == BIG and h.cell == BIG:
        S = g.r2 + s
        if S:
            return Sl2Elem(ctx, BIG, r - l*l/S, -l*mu/S, h.r2 - mu*mu/S)
        lm = l/mu
        return Sl2Elem(ctx, BOREL, r + lm*lm*h.r2, -lm)
    if g.cell == BOREL and h.cell == BIG:
        return Sl2Elem(ctx, BIG, r + l*l*s, l*mu, h.r2)
    if g.cell == BIG:
        return Sl2Elem(ctx, BIG, r, l/mu, (g.r2 + s)/(mu*mu))
    return Sl2Elem(ctx, BOREL, r + l*l*s, l*mu)


def product_case(g, h):
    "which of the five product formulas applies to (g, h)"
    if g.cell == BIG and h.cell == BIG:
        return 1 if g.r2 + h.r else 2
    if g.cell == BOREL and h.cell == BIG:
        return 3
    if g.cell == BIG:
        return 4
    return 5


def sl2_inv(g):
    ctx = g.ctx
    if g.cell == BOREL:
        # t(l)^-1 u(-r) = u(-r/l^2) t(1/l)
        l = g.lam
        return Sl2Elem(ctx, BOREL, -g.r/(l*l), l.inv())
    return Sl2Elem(ctx, BIG, -g.r2, -g.lam, -g.r)


def sl2_elements(ctx):
    out = []
    for r, l in product(ctx.elements(), ctx.units()):
        out.append(Sl2Elem(ctx, BOREL, r, l))
    for r, l, r2 in product(ctx.elements(), ctx.units(), ctx.elements()):
        out.append(Sl2Elem(ctx, BIG, r, l, r2))
    return out


def letters(g):
    """g as a word in u, m, t letters, leftmost first:
    [('u', r), ('t', l)] or [('u', r), ('m', l), ('u', r')]"""
    if g.cell == BOREL:
        return [("u", g.r), ("t", g.lam)]
    return [("u", g.r), ("m", g.lam), ("u", g.r2)]


def matmul(A, B):
    a, b, c, d = A
    e, f, g, h = B
    return (a*e + b*g, a*f + b*h, c*e + d*g, c*f + d*h)


def _mat_eq(A, B):
    return all(x == y for x, y in zip(A, B))


def sl2_relation_suite(ctx):
    """Check the rank one relations for every parameter value.

    Returns a dict with 'passed', 'checks' and 'failure' (first counterexample
    or None).  Both sides are evaluated with sl2_mul and compared structurally,
    and each side is compared with the matrix product as well.
    """
    if ctx.q > 16:
        raise ValueError("relation suite is exhaustive, needs q <= 16")
    checks = 0
    mul = sl2_mul
    inv = sl2_inv

    def conj(g, x):
        return mul(mul(g, x), inv(g))

    rels = []
    for l in ctx.units():
        rels.append(("m(l)^-1 = m(-l)", (l,), inv(m(ctx, l)), m(ctx, -l)))
        rels.append(("m(l)^2 = t(-1)", (l,), mul(m(ctx, l), m(ctx, l)), t(ctx, -ctx.one)))
        mm = mul(mul(u_minus(ctx, l.inv()), u(ctx, l)), u_minus(ctx, l.inv()))
        rels.append(("m(l) = u_(1/l)u(l)u_(1/l)", (l,), mm, m(ctx, l)))
        for r in ctx.elements():
            rels.append(("m(l)u(r)m(l)^-1 = u_(r/l^2)", (l, r), conj(m(ctx, l), u(ctx, r)), u_minus(ctx, r/(l*l))))
            rels.append(("m(l)u_(r)m(l)^-1 = u(l^2 r)", (l, r), conj(m(ctx, l), u_minus(ctx, r)), u(ctx, l*l*r)))
            rels.append(("t(l)u(r)t(l)^-1 = u(l^2 r)", (l, r), conj(t(ctx, l), u(ctx, r)), u(ctx, l*l*r)))
        for mu in ctx.units():
            rels.append(("m(l)t(mu)m(l)^-1 = t(mu)^-1", (l, mu), conj(m(ctx, l), t(ctx, mu)), inv(t(ctx, mu))))
            rels.append(("m(l)m(mu) = t(-l/mu)", (l, mu), mul(m(ctx, l), m(ctx, mu)), t(ctx, -l/mu)))
    for name, params, lhs, rhs in rels:
        checks += 1
        if lhs != rhs or not _mat_eq(to_matrix(lhs), to_matrix(rhs)):
            return {"passed": False, "checks": checks,
                    "failure": {"relation": name, "params": [str(x) for x in params],
                                "lhs": repr(lhs), "rhs": repr(rhs)}}
    return {"passed": True, "checks": checks, "failure": None}


def sl2_oracle_check(ctx):
    """Compare sl2_mul with matrix multiplication on all pairs, and check the
    matrix round trip.  Returns a report dict like sl2_relation_suite."""
    els = sl2_elements(ctx)
    mats = [to_matrix(g) for g in els]
    checks = 0
    cases = {c: 0 for c in range(1, 6)}
    for g, A in zip(els, mats):
        if sl2_from_matrix(*A) != g:
            return {"passed": False, "checks": checks, "cases": cases,
                    "failure": {"roundtrip": repr(g)}}
    for g, A in zip(els, mats):
        for h, B in zip(els, mats):
            checks += 1
            gh = sl2_mul(g, h)
            cases[product_case(g, h)] += 1
            if not _mat_eq(to_matrix(gh), matmul(A, B)):
                return {"passed": False, "checks": checks, "cases": cases,
                        "failure": {"g": repr(g), "h": repr(h), "gh": repr(gh)}}
    return {"passed": True, "checks": checks, "cases": cases, "failure": None}
