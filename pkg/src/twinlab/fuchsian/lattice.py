"""
The Bourdon lattice Gamma_{r,1+q} = < g_i | g_i^(q+1), [g_i, g_{i+1}] >, a graph
product of cyclic groups over the r-cycle, acting simply transitively on the
chambers of I_{r,1+q}.  Chambers of a ball are therefore group elements.
"""

import os
from collections import Counter

import networkx as nx

from twinlab.coxeter import adjacent, _reduce, _check_rank, growth_series
from twinlab.graphprod import insert_right, lex_normal
from twinlab.gfield import prime_factors

SCHEMA = "twinlab/1"


class BudgetExceeded(RuntimeError):
    pass


class GammaWord(tuple):
    """((i, e), ...) reduced and lexicographically least among rearrangements."""
    __slots__ = ()

    def __new__(cls, letters, r, q):
        return tuple.__new__(cls, (_gamma_normal(tuple(letters), r, q), r, q))

    letters = property(lambda self: self[0])
    r = property(lambda self: self[1])
    q = property(lambda self: self[2])

    def __len__(self):
        return len(self[0])

    def __mul__(self, other):
        return gamma_mul(self, other)

    def inverse(self):
        w, r, q = self
        return GammaWord(tuple((i, (q + 1 - e) % (q + 1)) for i, e in reversed(w)), r, q)

    def weyl(self):
        "image in the Coxeter group (each g_i^e maps to r_i)"
        return _reduce(tuple(i for i, _ in self[0]), self[1])

    def __repr__(self):
        if not self[0]:
            return "1"
        return "".join("g%d^%d" % ie if ie[1] != 1 else "g%d" % ie[0] for ie in self[0])


def _gamma_normal(letters, r, q):
    comm = lambda a, b: adjacent(a, b, r)
    comb = lambda e, f: (e + f) % (q + 1) or None
    word = []
    for i, e in letters:
        e %= q + 1
        if e:
            word = insert_right(word, i % r, e, comm, comb)
    return tuple(lex_normal(word, comm, lambda i: i))


def gamma_gen(r, q, i, e=1):
    return GammaWord(((i, e),), r, q)


def gamma_one(r, q):
    return GammaWord((), r, q)


def gamma_mul(x, y):
    if x[1:] != y[1:]:
        raise ValueError("different lattices")
    return GammaWord(x[0] + y[0], x[1], x[2])


def gamma_order(x, limit=1000):
    one = gamma_one(x.r, x.q)
    y = x
    for n in range(1, limit + 1):
        if y == one:
            return n
        y = y*x
    return None


def commuting_pairs(r, q):
    "pairs (i, j), i < j, with g_i g_j = g_j g_i"
    out = []
    for i in range(r):
        for j in range(i + 1, r):
            a, b = gamma_gen(r, q, i), gamma_gen(r, q, j)
            if a*b == b*a:
                out.append((i, j))
    return out


# ------------------------------------------------------------------ ball

def _budget():
    mb = float(os.environ.get("TWINLAB_BUDGET_MB", "512"))
    return int(mb*512)


def gamma_ball(r, q, radius):
    "all elements of syllable length <= radius, by levels"
    _check_rank(r)
    levels = [[gamma_one(r, q)]]
    seen = {gamma_one(r, q)}
    cap = _budget()
    for n in range(radius):
        nxt = []
        for g in levels[-1]:
            for i in range(r):
                for e in range(1, q + 1):
                    h = g*gamma_gen(r, q, i, e)
                    if len(h) == n + 1 and h not in seen:
                        seen.add(h)
                        nxt.append(h)
        nxt.sort(key=lambda g: g.letters)
        levels.append(nxt)
        if len(seen) > cap:
            raise BudgetExceeded("Fuchsian ball of radius %d exceeds the budget" % radius)
    return levels


def panel_coset(g, i):
    "the type i panel of g, as the sorted tuple of its members"
    r, q = g.r, g.q
    return tuple(sorted((g*gamma_gen(r, q, i, e) for e in range(q + 1)), key=lambda h: h.letters))


def vertex_coset(g, i):
    "the type (i, i+1) vertex residue of g"
    r, q = g.r, g.q
    j = (i + 1) % r
    mem = {g*gamma_gen(r, q, i, a)*gamma_gen(r, q, j, b)
           for a in range(q + 1) for b in range(q + 1)}
    return tuple(sorted(mem, key=lambda h: h.letters))


class FuchsianBall(object):
    """Chambers of syllable length <= R, with the panels and vertex residues
    all of whose chambers lie in the ball."""

    def __init__(self, r, q, radius):
        self.r, self.q, self.radius = r, q, radius
        self.levels = gamma_ball(r, q, radius)
        self.chambers = [g for lev in self.levels for g in lev]
        self.index = {g: n for n, g in enumerate(self.chambers)}
        panels = {}
        vertices = {}
        for g in self.chambers:
            for i in range(r):
                P = panel_coset(g, i)
                if P not in panels and all(h in self.index for h in P):
                    panels[P] = i
                V = vertex_coset(g, i)
                if V not in vertices and all(h in self.index for h in V):
                    vertices[V] = i
        self.panels = sorted(((i, P) for P, i in panels.items()),
                             key=lambda ip: (ip[0], [self.index[h] for h in ip[1]]))
        self.vertices = sorted(((i, V) for V, i in vertices.items()),
                               key=lambda iv: (iv[0], [self.index[h] for h in iv[1]]))

    def __len__(self):
        return len(self.chambers)

    def counts_by_length(self):
        return [len(lev) for lev in self.levels]

    def panel_sizes(self):
        return Counter(len(P) for _, P in self.panels)

    def base_panels(self):
        "the r panels of the base chamber"
        one = gamma_one(self.r, self.q)
        return [panel_coset(one, i) for i in range(self.r)]

    def vertex_link(self, i, V):
        """bipartite graph of the type i and type i+1 panels inside the
        vertex residue V, joined through the chambers they share"""
        j = (i + 1) % self.r
        g = nx.Graph()
        for h in V:
            Pi = ("i", panel_coset(h, i))
            Pj = ("j", panel_coset(h, j))
            g.add_node(Pi, bipartite=0)
            g.add_node(Pj, bipartite=1)
            g.add_edge(Pi, Pj)
        return g

    def links_complete_bipartite(self):
        n = self.q + 1
        bad = []
        for i, V in self.vertices:
            L = self.vertex_link(i, V)
            left = [v for v, d in L.nodes(data=True) if d["bipartite"] == 0]
            right = [v for v, d in L.nodes(data=True) if d["bipartite"] == 1]
            if not (len(left) == n and len(right) == n and L.number_of_edges() == n*n):
                bad.append((i, V))
        return {"passed": not bad, "vertices": len(self.vertices), "failures": bad[:3]}

    def chamber_graph(self):
        g = nx.Graph()
        g.add_nodes_from(range(len(self.chambers)))
        for x in self.chambers:
            for i in range(self.r):
                for e in range(1, self.q + 1):
                    y = x*gamma_gen(self.r, self.q, i, e)
                    if y in self.index:
                        g.add_edge(self.index[x], self.index[y], type=i)
        return g

    def to_json(self):
        return {
            "schema": SCHEMA, "r": self.r, "q": self.q, "radius": self.radius,
            "chambers": [{"id": n, "letters": [[i, e] for i, e in g.letters]}
                         for n, g in enumerate(self.chambers)],
            "panels": [{"type": i, "chamber_ids": [self.index[h] for h in P]}
                       for i, P in self.panels],
            "vertices": [{"type": [i, (i + 1) % self.r], "chamber_ids": [self.index[h] for h in V]}
                         for i, V in self.vertices],
        }

    def to_dot(self):
        lines = ["graph fuchsian {", "  node [shape=point];"]
        for n, g in enumerate(self.chambers):
            lines.append('  c%d [label="%r"];' % (n, g))
        for pn, (i, P) in enumerate(self.panels):
            lines.append('  p%d [shape=circle, width=0.06, label="%d"];' % (pn, i))
            for h in P:
                lines.append("  p%d -- c%d;" % (pn, self.index[h]))
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_fuchsian_ball(r, q, radius, fields=None):
    """Ball in I_{r,1+q}.  With a field list, all thicknesses must agree."""
    if fields is not None:
        qs = {k.q if hasattr(k, "q") else int(k) for k in fields}
        if len(qs) != 1:
            raise ValueError("the lattice model needs equal thickness at every panel; "
                             "use local_structure for mixed fields")
    return FuchsianBall(r, q, radius)


def local_structure(qs):
    """Link of each vertex type (i, i+1): K_{1+q_i, 1+q_{i+1}}, together with the
    check that every 1+q_i is the size of a projective line over a field."""
    qs = [k.q if hasattr(k, "q") else int(k) for k in qs]
    r = len(qs)
    _check_rank(r)
    out = []
    for i in range(r):
        j = (i + 1) % r
        out.append({"vertex": (i, j), "link": "K_{%d,%d}" % (1 + qs[i], 1 + qs[j]),
                    "sizes": (1 + qs[i], 1 + qs[j])})
    prime_powers = [len(prime_factors(q)) == 1 for q in qs]
    return {"links": out, "thickness": [1 + q for q in qs],
            "projective_lines": all(prime_powers)}


# ------------------------------------------------------- loops

def _in_subgroup(x, types):
    return all(i in types for i, _ in x.letters)


def _shortcut(x, y, i):
    "a shortest gallery from x to y inside their common (i, i+1) residue"
    d = x.inverse()*y
    out = [x]
    cur = x
    for letter in d.letters:
        cur = cur*GammaWord((letter,), x.r, x.q)
        out.append(cur)
    return out


def contract_loop(loop):
    """Contract a closed gallery (list of chambers, first = last) by
    elementary homotopies inside vertex residues.  Returns the number of
    moves, or None when stuck."""
    path = list(loop)
    r = path[0].r
    moves = 0
    while len(path) > 1:
        progress = False
        n = len(path)
        for i in range(r):
            types = (i, (i + 1) % r)
            # longest run of consecutive chambers in one residue of this type
            for a in range(n - 1):
                b = a + 1
                while b < n and _in_subgroup(path[a].inverse()*path[b], types):
                    b += 1
                b -= 1
                if b - a >= 2:
                    new = _shortcut(path[a], path[b], i)
                    if len(new) < b - a + 1:
                        path = path[:a] + new + path[b + 1:]
                        moves += 1
                        progress = True
                        break
            if progress:
                break
        if not progress:
            # a single step that returns: [x, y, x] -> [x]
            for a in range(len(path) - 2):
                if path[a] == path[a + 2]:
                    path = path[:a + 1] + path[a + 3:]
                    moves += 1
                    progress = True
                    break
        if not progress:
            # collapse repeated chambers
            for a in range(len(path) - 1):
                if path[a] == path[a + 1]:
                    path = path[:a + 1] + path[a + 2:]
                    progress = True
                    break
        if not progress:
            return None
    return moves


def closed_galleries(r, q, maxlen):
    """all closed galleries at the base chamber with at most maxlen steps and
    no immediate backtracking inside a panel"""
    one = gamma_one(r, q)
    steps = [gamma_gen(r, q, i, e) for i in range(r) for e in range(1, q + 1)]
    out = []

    def rec(path, last_type):
        cur = path[-1]
        left = maxlen - (len(path) - 1)
        if len(path) > 1 and cur == one:
            out.append(list(path))
            return
        if left == 0 or len(cur) > left:
            return
        for s in steps:
            t = s.letters[0][0]
            if t == last_type:
                continue
            path.append(cur*s)
            rec(path, t)
            path.pop()

    rec([one], None)
    return out


def verify_loops(r, q, maxlen=6):
    loops = closed_galleries(r, q, maxlen)
    stuck = [L for L in loops if contract_loop(L) is None]
    return {"passed": not stuck, "loops": len(loops),
            "lengths": dict(Counter(len(L) - 1 for L in loops)), "stuck": stuck[:3]}


def verify_growth(r, q, radius):
    "chambers at syllable length n against d_n q^n"
    ball = gamma_ball(r, q, radius)
    d = growth_series(r, radius)
    rows = [(n, len(lev), d[n]*q**n) for n, lev in enumerate(ball)]
    return {"passed": all(a == b for _, a, b in rows), "rows": rows}
