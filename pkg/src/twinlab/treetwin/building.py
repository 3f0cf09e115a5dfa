"""
The positive half of the twin tree, as the coset space Lambda/B.

A chamber is the letter sequence ((i1, r1), (i2, r2), ...) of its coset
representative u_{i1}(r1) m_{i1} u_{i2}(r2) m_{i2} ...; the base chamber is ().
The type i panel of a chamber L is keyed by L[:-1] when L ends with an i
letter and by L otherwise; its members are the key and key + ((i, r),).
"""

import os
import random
from collections import Counter
from itertools import product

import networkx as nx

from twinlab.coxeter import (TreeRoot, simple_root, positive_roots, tree_phi,
                             dinf_words, tree_prenilpotent)
from twinlab import sl2kit
from twinlab.treetwin.groups import (UPlusWord, BorelElem, TorusElem, torus_one,
                                     decompose, gens_word)
from twinlab.treetwin import amalgam as am

SCHEMA = "twinlab/1"


class BudgetExceeded(RuntimeError):
    pass


def budget_chambers():
    "rough cap on enumerated chambers, from TWINLAB_BUDGET_MB (about 2 KB per chamber)"
    mb = float(os.environ.get("TWINLAB_BUDGET_MB", "512"))
    return int(mb*512)


def chamber_sequences(cfg, radius):
    out = [()]
    frontier = [()]
    cap = budget_chambers()
    for _ in range(radius):
        nxt = []
        for L in frontier:
            for i in (0, 1):
                if L and L[-1][0] == i:
                    continue
                for r in cfg.K[i].elements():
                    nxt.append(L + ((i, r),))
        out.extend(nxt)
        frontier = nxt
        if len(out) > cap:
            raise BudgetExceeded("ball of radius %d has more than %d chambers" % (radius, cap))
    return out


def panel_key(L, i):
    return L[:-1] if L and L[-1][0] == i else L


def panel_members(cfg, key, i):
    return [key] + [key + ((i, r),) for r in cfg.K[i].elements()]


class Ball(object):
    """Chambers of length <= R with the full panels among them."""

    def __init__(self, cfg, radius):
        self.cfg = cfg
        self.radius = radius
        self.chambers = sorted(chamber_sequences(cfg, radius), key=chamber_sort_key)
        self.index = {L: n for n, L in enumerate(self.chambers)}
        self.panels = []
        for L in self.chambers:
            for i in (0, 1):
                if panel_key(L, i) == L and len(L) < radius:
                    self.panels.append((i, L, panel_members(cfg, L, i)))

    def __len__(self):
        return len(self.chambers)

    def chamber_graph(self):
        g = nx.Graph()
        g.add_nodes_from(range(len(self.chambers)))
        for i, key, mem in self.panels:
            ids = [self.index[L] for L in mem]
            for a in ids:
                for b in ids:
                    if a < b:
                        g.add_edge(a, b, type=i)
        return g

    def incidence_graph(self):
        "bipartite chamber/panel graph; the building is a tree iff this is a tree"
        g = nx.Graph()
        g.add_nodes_from(("c", n) for n in range(len(self.chambers)))
        for n, (i, key, mem) in enumerate(self.panels):
            for L in mem:
                g.add_edge(("p", n), ("c", self.index[L]))
        return g

    def is_tree(self):
        return nx.is_tree(self.incidence_graph())

    def valencies(self):
        "Counter of (type, panel size)"
        return Counter((i, len(mem)) for i, _, mem in self.panels)

    def to_json(self):
        return {
            "schema": SCHEMA,
            "fields": [k.spec() for k in self.cfg.K],
            "radius": self.radius,
            "chambers": [{"id": n, "letters": [[i, int(r)] for i, r in L]}
                         for n, L in enumerate(self.chambers)],
            "panels": [{"type": i, "chamber_ids": [self.index[L] for L in mem]}
                       for i, _, mem in self.panels],
        }

    def to_dot(self):
        lines = ["graph twintree {", "  node [shape=point];"]
        for n, L in enumerate(self.chambers):
            lines.append('  c%d [label="%s"];' % (n, chamber_label(L)))
        for pn, (i, _, mem) in enumerate(self.panels):
            lines.append('  p%d [shape=circle, width=0.08, label="", color=%s];'
                         % (pn, "red" if i == 0 else "blue"))
            for L in mem:
                lines.append("  p%d -- c%d;" % (pn, self.index[L]))
        lines.append("}")
        return "\n".join(lines) + "\n"


def chamber_sort_key(L):
    return (len(L), tuple((i, r.v) for i, r in L))


def chamber_label(L):
    return "".join("%d%s" % (i, r) for i, r in L) or "E"


def build_ball(cfg, radius, sign=1):
    """Ball of radius R around the base chamber.  The negative half is the
    same graph on the labels g.B_-, so sign only changes what the letters mean."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return Ball(cfg, radius)


# ------------------------------------------------------------ W-distance

def w_distance(cfg, c, d):
    "reduced D_inf word delta(cB, dB), read off from the normal form of c^-1 d"
    x = am.chamber_elem(cfg, c)
    y = am.chamber_elem(cfg, d)
    return am.w_distance_elems(cfg, x, y)


def sequence_distance(c, d):
    """The same distance read off the two letter sequences directly: the
    path in the tree climbs from c to the branch point and descends to d."""
    n = 0
    while n < min(len(c), len(d)) and c[n] == d[n]:
        n += 1
    up = [i for i, _ in reversed(c[n:])]
    down = [i for i, _ in d[n:]]
    if up and down and up[-1] == down[0]:
        # c and d leave the common prefix through the same panel
        return tuple(up[:-1]) + (down[0],) + tuple(down[1:])
    return tuple(up) + tuple(down)


def bfs_distance(ball, c, d, graph=None):
    "type word of the shortest gallery in the ball (oracle)"
    g = graph if graph is not None else ball.chamber_graph()
    a, b = ball.index[c], ball.index[d]
    path = nx.shortest_path(g, a, b)
    return tuple(g.edges[path[k], path[k+1]]["type"] for k in range(len(path) - 1))


# -------------------------------------------------------- root groups in Lambda

def root_word(b, maxlen=40):
    "(v, j): a shortest D_inf word v and type j with v.a_j = b"
    for v in dinf_words(maxlen):
        for j in (0, 1):
            if simple_root(j).act(v) == b:
                return v, j
    raise ValueError("root %r out of range" % (b,))


def conj(cfg, g, x):
    return am.lambda_mul(cfg, am.lambda_mul(cfg, g, x), am.lambda_inv(cfg, g))


def root_group_elem(cfg, b, k):
    """x_b(k) := n_v u_{a_j}(k) n_v^-1 with v.a_j = b.  For positive b this is
    u_b(+-k) up to the torus-type sign conventions of the normal form."""
    v, j = root_word(b)
    x = am.root_elem(cfg, simple_root(j), k)
    return conj(cfg, am.n_word(cfg, v), x)


def root_group(cfg, b):
    "the elements x_b(k), k in K_{type b}, keyed by normal form"
    K = cfg.K[b.type]
    return {root_group_elem(cfg, b, k).key(): k for k in K.elements()}


def window_roots(W):
    "all roots (both signs) whose vertex n has |2n - 1| <= 2W - 1"
    out = []
    for n in range(-W + 1, W + 1):
        out.append(TreeRoot(n, 1))
        out.append(TreeRoot(n, -1))
    return out


def u_minus_elem(cfg, i, r):
    "u_{-a_i}(r)"
    return am.from_sl2(cfg, i, sl2kit.u_minus(cfg.K[i], r))


def verify_trd(cfg, W=4):
    """Check the twin root datum axioms on the roots of a window.

    TRD0  each U_a is a nontrivial group of order q, stable under T
    TRD1  prenilpotent pairs {a, b}, b != +-a, commute; the others do not
    TRD2  m(u) = u_-(1/k) u(k) u_-(1/k) conjugates U_b onto U_{s_i b}, and
          m(u)^-1 m(v) lies in T
    TRD3  U_{a_i} is not in U_-: nontrivial products of negative root
          elements have a nonempty letter sequence while U_{a_i} lies in B
    TRD4  m_i is a product of root elements, so T and the root groups
          generate every coset letter
    """
    roots = window_roots(W)
    groups = {b: root_group(cfg, b) for b in roots}
    checks = Counter()
    failures = []

    def fail(axiom, **info):
        if len(failures) < 5:
            failures.append(dict(axiom=axiom, **{k: repr(v) for k, v in info.items()}))

    units = {i: cfg.K[i].units() for i in (0, 1)}
    torus = [TorusElem(a, b) for a in units[0] for b in units[1]]
    # TRD0
    for b in roots:
        K = cfg.K[b.type]
        checks["TRD0"] += 1
        if len(groups[b]) != K.q:
            fail("TRD0", root=b, size=len(groups[b]))
        for t in torus:
            tt = am.from_borel(cfg, BorelElem(t, UPlusWord()))
            for k in units[b.type]:
                y = conj(cfg, tt, root_group_elem(cfg, b, k))
                if y.key() not in groups[b]:
                    fail("TRD0", root=b, torus=t, k=k)
        if b.is_positive():
            # the Lambda conjugate agrees with the U+ letter up to the scalar
            lets = {am.root_elem(cfg, b, k).key() for k in K.elements()}
            if lets != set(groups[b]):
                fail("TRD0", root=b, note="conjugate differs from the U+ root group")
    # TRD1
    for a, b in product(roots, roots):
        if a >= b or a == -b:
            continue
        pn = tree_prenilpotent(a, b)
        ka, kb = units[a.type][0], units[b.type][0]
        x = root_group_elem(cfg, a, ka)
        y = root_group_elem(cfg, b, kb)
        comm = am.lambda_mul(cfg, am.lambda_mul(cfg, x, y),
                             am.lambda_inv(cfg, am.lambda_mul(cfg, y, x)))
        checks["TRD1"] += 1
        if pn and not am.is_identity(comm):
            fail("TRD1", a=a, b=b, commutator=comm)
        if not pn and am.is_identity(comm):
            fail("TRD1-free", a=a, b=b)
    # TRD2
    for i in (0, 1):
        K = cfg.K[i]
        ms = []
        for k in units[i]:
            um = u_minus_elem(cfg, i, k.inv())
            mu = am.lambda_mul(cfg, am.lambda_mul(cfg, um, am.root_elem(cfg, simple_root(i), k)), um)
            checks["TRD2"] += 1
            if not am.lambda_eq(mu, am.m_elem(cfg, i, k)):
                fail("TRD2", i=i, k=k, m=mu)
            ms.append(mu)
            for b in roots:
                sb = b.reflect(i)
                for kb in units[b.type]:
                    y = conj(cfg, mu, root_group_elem(cfg, b, kb))
                    if y.key() not in groups.get(sb, root_group(cfg, sb)):
                        fail("TRD2", i=i, k=k, b=b)
        for x in ms:
            for y in ms:
                z = am.lambda_mul(cfg, am.lambda_inv(cfg, x), y)
                if z[0] or z[1][1]:
                    fail("TRD2-T", i=i, m=z)
        g = sl2kit.sl2_mul(sl2kit.sl2_mul(sl2kit.u_minus(K, 1), sl2kit.u(K, 1)), sl2kit.u_minus(K, 1))
        if tuple(int(e) % K.p for e in g.matrix()) != (0, 1, K.p - 1, 0):
            fail("TRD2-matrix", i=i, m=g.matrix())
    # TRD3
    neg = [b for b in roots if not b.is_positive()]
    elems = [root_group_elem(cfg, b, k) for b in neg for k in units[b.type]]
    for x in elems:
        for y in elems:
            z = am.lambda_mul(cfg, x, y)
            checks["TRD3"] += 1
            if not z[0] and not am.is_identity(z):
                fail("TRD3", x=x, y=y)
    for i in (0, 1):
        for k in units[i]:
            if am.root_elem(cfg, simple_root(i), k)[0]:
                fail("TRD3", i=i)
    # TRD4
    for i in (0, 1):
        checks["TRD4"] += 1
        mi = am.lambda_mul(cfg, am.lambda_mul(cfg, u_minus_elem(cfg, i, 1),
                                               am.root_elem(cfg, simple_root(i), cfg.K[i].one)),
                           u_minus_elem(cfg, i, 1))
        if mi.letters != ((i, cfg.K[i].zero),) or not mi.tail.is_identity():
            fail("TRD4", i=i, m=mi)
    return {"passed": not failures, "checks": dict(checks), "failures": failures, "window": W}


def verify_rt2c(cfg, W=3):
    """U+ = U_{a_i} (U+ cap m_i^-1 U+ m_i): the U^i part of every word on the
    window roots is moved into U+ by m_i."""
    bad = []
    n = 0
    for i in (0, 1):
        mi = am.m_elem(cfg, i)
        mi_inv = am.lambda_inv(cfg, mi)
        roots = positive_roots(0, W) + positive_roots(1, W)
        for a, b in product(roots, roots):
            u = UPlusWord.letter(a, cfg.field(a).one)*UPlusWord.letter(b, cfg.field(b).one)
            c, gens = decompose(i, u, cfg.K[i])
            x = gens_word(i, gens)
            rebuilt = UPlusWord.letter(simple_root(i), c)*x
            y = am.lambda_mul(cfg, am.lambda_mul(cfg, mi, am.from_borel(cfg, BorelElem(torus_one(cfg), x))), mi_inv)
            n += 1
            if rebuilt.key() != u.key() or y[0] or not y[1][0].is_identity():
                bad.append((i, a, b))
    return {"passed": not bad, "checks": n, "failures": bad[:5]}


# -------------------------------------------------------------- Moufang

def root_of_panel(key, i):
    "the positive root whose wall is the type i panel keyed by key"
    w = tuple(j for j, _ in key)
    a = simple_root(i).act(w)
    assert a.is_positive()
    return w, a


def verify_moufang(cfg, radius=3):
    """At every panel P of the ball, the root group U of the root through P
    containing the base chamber fixes the projection of E on P and acts
    simply transitively on the q other chambers of P."""
    ball = Ball(cfg, radius)
    bad = []
    for i, key, mem in ball.panels:
        w, a = root_of_panel(key, i)
        g = am.chamber_elem(cfg, key)
        u = am.lambda_mul(cfg, g, am.lambda_inv(cfg, am.n_word(cfg, w)))
        if u[0]:
            bad.append((key, i, "coset representative not in U+ n_w"))
            continue
        others = set(mem[1:])
        images = set()
        for k in cfg.K[i].elements():
            x = conj(cfg, u, am.root_elem(cfg, a, k))
            if am.act_chamber(cfg, x, key) != key:
                bad.append((key, i, "moves the projection"))
            images.add(am.act_chamber(cfg, x, key + ((i, cfg.K[i].zero),)))
        if images != others:
            bad.append((key, i, "not simply transitive"))
    return {"passed": not bad, "panels": len(ball.panels), "failures": bad[:5]}


# -------------------------------------------------- U_w and faithfulness

def uw_counts(cfg, maxlen=5):
    """|{chambers at W-distance w from E}| against prod over Phi_{w^-1} of q_type."""
    rows = []
    ball = chamber_sequences(cfg, maxlen)
    base = am.identity(cfg)
    count = Counter()
    for L in ball:
        count[am.w_distance_elems(cfg, base, am.chamber_elem(cfg, L))] += 1
    for w in dinf_words(maxlen):
        expect = 1
        for a in tree_phi(w):
            expect *= cfg.K[a.type].q
        rows.append((w, count[w], expect))
    return {"passed": all(c == e for _, c, e in rows), "rows": rows}


def commensurability_index(cfg, w):
    "[Gamma : Gamma cap w Gamma w^-1] = prod over Phi_{w^-1} of q_type"
    n = 1
    for a in tree_phi(tuple(w)):
        n *= cfg.K[a.type].q
    return n


def action_signature(cfg, g, chambers):
    return tuple(tuple((i, r.v) for i, r in am.act_chamber(cfg, g, L)) for L in chambers)


def verify_faithfulness(cfg, samples=10, radius=6, seed=0):
    """Elements act identically on the ball iff they differ by a central
    torus element (lambda_0^2 = lambda_1^2 = 1)."""
    rng = random.Random(seed)
    chambers = chamber_sequences(cfg, radius)
    central = [TorusElem(a, b) for a in cfg.K[0].units() for b in cfg.K[1].units()
               if a*a == a.ctx.one and b*b == b.ctx.one]
    noncentral = [TorusElem(a, b) for a in cfg.K[0].units() for b in cfg.K[1].units()
                  if not (a*a == a.ctx.one and b*b == b.ctx.one)]
    bad = []
    for _ in range(samples):
        x = am.random_lambda(cfg, rng)
        sx = action_signature(cfg, x, chambers)
        for t in central:
            y = am.lambda_mul(cfg, x, am.from_borel(cfg, BorelElem(t, UPlusWord())))
            if action_signature(cfg, y, chambers) != sx:
                bad.append(("central torus acts", t))
        for t in noncentral:
            y = am.lambda_mul(cfg, x, am.from_borel(cfg, BorelElem(t, UPlusWord())))
            if action_signature(cfg, y, chambers) == sx:
                bad.append(("noncentral torus acts trivially", t))
        z = am.random_lambda(cfg, rng)
        diff = am.lambda_mul(cfg, am.lambda_inv(cfg, x), z)
        in_kernel = not diff[0] and not diff[1][1] and diff[1][0] in central
        same = action_signature(cfg, z, chambers) == sx
        if same != in_kernel:
            bad.append(("random pair", x, z))
    return {"passed": not bad, "chambers": len(chambers), "failures": bad[:5]}
