"""
The amalgam Lambda = P_0 *_B P_1.

An element of P_i is a triple (g, tau, x): g in SL_2(K_i), tau in K_{1-i}^x,
x in U^i (a UPlusWord), standing for the product g.tau.x.  Since
P_i = B u U_i m_i B, every element of Lambda is uniquely

    (u_{i1}(r1) m_{i1}) (u_{i2}(r2) m_{i2}) ... b,     i_j != i_{j+1}, b in B,

which is what LambdaWord stores.
"""

from twinlab import sl2kit
from twinlab.sl2kit import Sl2Elem, BOREL
from twinlab.coxeter import simple_root, positive_roots
from twinlab.treetwin.groups import (
    UPlusWord, BorelElem, TorusElem, torus_one, borel_one, borel_mul,
    decompose, adjoint, gens_word)


class PElem(tuple):
    "(g, tau, x) in P_i = (SL_2(K_i) x K_{1-i}^x) x| U^i"
    __slots__ = ()

    def __new__(cls, g, tau, x):
        return tuple.__new__(cls, (g, tau, x))


def p_mul(cfg, i, y, z):
    """(g tau x)(g' tau' x') = (g g', tau tau', Ad((g' tau')^-1)(x) . x')"""
    g, tau, x = y
    h, sig, w = z
    if x:
        x = adjoint(i, sl2kit.sl2_inv(h), sig.inv(), x, cfg.K[i])
    return PElem(sl2kit.sl2_mul(g, h), tau*sig, x*w)


def borel_to_p(cfg, i, b):
    "t_i(l_i) tau u_i(c) x = (u_i(l^2 c) t_i(l)) tau x"
    t, u = b
    Ki = cfg.K[i]
    c, gens = decompose(i, u, Ki)
    lam = t[i]
    g = Sl2Elem(Ki, BOREL, lam*lam*c, lam)
    return PElem(g, t[1 - i], gens_word(i, gens))


def p_to_borel(cfg, i, y):
    "u_i(r) t_i(l) tau x = t . u_i(r / l^2) x"
    g, tau, x = y
    assert g.cell == BOREL
    lam = g.lam
    lams = [None, None]
    lams[i] = lam
    lams[1 - i] = tau
    u = UPlusWord.letter(simple_root(i), g.r/(lam*lam))*x
    return BorelElem(TorusElem(*lams), u)


class LambdaWord(tuple):
    """((i1, r1), (i2, r2), ...), tail  --  see module docstring"""
    __slots__ = ()

    def __new__(cls, letters, tail):
        return tuple.__new__(cls, (tuple(letters), tail))

    letters = property(lambda self: self[0])
    tail = property(lambda self: self[1])

    def weyl(self):
        return tuple(i for i, _ in self[0])

    def key(self):
        return (tuple((i, r.v) for i, r in self[0]), self[1].key())

    def __repr__(self):
        s = "".join("u%d(%s)m%d " % (i, r, i) for i, r in self[0])
        t, u = self[1]
        return "%s[t=(%s,%s) u=%r]" % (s, t[0], t[1], u)


def identity(cfg):
    return LambdaWord((), borel_one(cfg))


def from_borel(cfg, b):
    return LambdaWord((), b)


def from_p(cfg, i, y):
    return mul_p(cfg, identity(cfg), i, y)


def from_sl2(cfg, i, g):
    return from_p(cfg, i, PElem(g, cfg.K[1 - i].one, UPlusWord()))


def root_elem(cfg, a, k):
    "u_a(k) for a positive root a"
    return LambdaWord((), BorelElem(torus_one(cfg), UPlusWord.letter(a, k)))


def torus_elem(cfg, l0, l1):
    return LambdaWord((), BorelElem(TorusElem(l0, l1), UPlusWord()))


def m_elem(cfg, i, lam=None):
    K = cfg.K[i]
    return from_sl2(cfg, i, sl2kit.m(K, K.one if lam is None else lam))


def n_word(cfg, w):
    "m_{i1} m_{i2} ... for a D_inf word w"
    return LambdaWord(tuple((i, cfg.K[i].zero) for i in w), borel_one(cfg))


def chamber_elem(cfg, letters):
    return LambdaWord(tuple(letters), borel_one(cfg))


def mul_p(cfg, x, i, y):
    """x.y for a LambdaWord x and y in P_i."""
    letters = list(x[0])
    tail = x[1]
    Ki = cfg.K[i]
    z = p_mul(cfg, i, borel_to_p(cfg, i, tail), y)
    if letters and letters[-1][0] == i:
        _, r = letters.pop()
        left = PElem(sl2kit.um(Ki, r), cfg.K[1 - i].one, UPlusWord())
        z = p_mul(cfg, i, left, z)
    g, tau, w = z
    if g.cell == BOREL:
        return LambdaWord(letters, p_to_borel(cfg, i, z))
    # u(r) m(l) u(r') = u(r) m(1) . t(1/l) u(r')
    lam = g.lam
    letters.append((i, g.r))
    rest = PElem(Sl2Elem(Ki, BOREL, g.r2/(lam*lam), lam.inv()), tau, w)
    return LambdaWord(letters, p_to_borel(cfg, i, rest))


def lambda_mul(cfg, x, y):
    for i, r in y[0]:
        x = mul_p(cfg, x, i, PElem(sl2kit.um(cfg.K[i], r), cfg.K[1 - i].one, UPlusWord()))
    return LambdaWord(x[0], borel_mul(x[1], y[1]))


def lambda_inv(cfg, x):
    out = LambdaWord((), x[1].inverse())
    for i, r in reversed(x[0]):
        g = sl2kit.sl2_inv(sl2kit.um(cfg.K[i], r))
        out = mul_p(cfg, out, i, PElem(g, cfg.K[1 - i].one, UPlusWord()))
    return out


def lambda_eq(x, y):
    return x.key() == y.key()


def is_identity(x):
    return not x[0] and x[1].is_identity()


def act_chamber(cfg, g, letters):
    "g applied to the chamber with the given letter sequence"
    return lambda_mul(cfg, g, chamber_elem(cfg, letters))[0]


def w_distance_elems(cfg, x, y):
    "W-distance between the chambers xB and yB"
    return lambda_mul(cfg, lambda_inv(cfg, x), y).weyl()


# ------------------------------------------------------------- random elements

def random_uplus(cfg, rng, length=3, radius=3):
    roots = positive_roots(0, radius) + positive_roots(1, radius)
    u = UPlusWord()
    for _ in range(length):
        a = rng.choice(roots)
        u = u*UPlusWord.letter(a, rng.choice(cfg.field(a).units()))
    return u


def random_torus(cfg, rng):
    return TorusElem(rng.choice(cfg.K[0].units()), rng.choice(cfg.K[1].units()))


def random_borel(cfg, rng, length=3, radius=3):
    return BorelElem(random_torus(cfg, rng), random_uplus(cfg, rng, length, radius))


def random_lambda(cfg, rng, nletters=3, length=3, radius=3):
    n = rng.randint(0, nletters)
    i = rng.randint(0, 1)
    letters = []
    for _ in range(n):
        letters.append((i, rng.choice(cfg.K[i].elements())))
        i = 1 - i
    return LambdaWord(letters, random_borel(cfg, rng, length, radius))
