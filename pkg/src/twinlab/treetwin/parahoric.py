"""
Finite shadows of parahoric subgroups: U(F) restricted to an exhaustion E_n
of the tree around a facet F of the base chamber, as permutation groups.

Facets are ("vertex", i) for the type i vertex of E, and ("edge",) for E.
E_n grows one chamber of the standard apartment at a time, so the kernel
K_n of E_{n+1} -> E_n only sees the panel crossed at step n.
"""

from collections import Counter

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.core.random import seed as sympy_seed

from twinlab.coxeter import simple_root, positive_roots, dinf_words
from twinlab.gfield import prime_factors
from twinlab.treetwin.groups import UPlusWord, BorelElem, torus_one
from twinlab.treetwin import amalgam as am
from twinlab.treetwin.building import chamber_sequences, commensurability_index


def _facet(F):
    if F in (("edge",), "edge"):
        return ("edge",)
    if isinstance(F, tuple) and F[0] == "vertex" and F[1] in (0, 1):
        return F
    raise ValueError("facet must be ('vertex', 0|1) or ('edge',); got %r" % (F,))


def apartment_order(F, n):
    """The first n Weyl words of the standard apartment in the order chambers
    are added, together with the type of the panel crossed to add each one."""
    F = _facet(F)
    words = dinf_words(n + 2)
    if F[0] == "edge":
        seq = words[:n]
    else:
        i = F[1]
        # the two chambers at the vertex come first, then alternate outwards
        seq = [w for w in words if w == () or w == (i,)]
        rest = [w for w in words if w not in seq]
        rest.sort(key=lambda w: (len(w) - (1 if w and w[0] == i else 0), w))
        seq = (seq + rest)[:max(n, 2)]
    return seq


def exhaustion(cfg, F, n, maxlen=None):
    """E_n: chambers whose W-distance from E is among the first words of
    apartment_order(F, n).  U(F) preserves it since it fixes E and d(E, -)."""
    F = _facet(F)
    seq = set(apartment_order(F, n))
    L = max((len(w) for w in seq), default=0)
    return [c for c in chamber_sequences(cfg, L) if tuple(i for i, _ in c) in seq]


def crossed_type(F, n):
    "type of the panel crossed when E_n grows to E_{n+1}, None if it does not grow"
    old = apartment_order(F, n)
    new = apartment_order(F, n + 1)
    if len(new) == len(old):
        return None
    return new[-1][-1]


def facet_generators(cfg, F, radius):
    "U(F): U+ for the edge, U^i for the type i vertex, as window root elements"
    F = _facet(F)
    gens = []
    for j in (0, 1):
        for a in positive_roots(j, radius):
            if F[0] == "vertex" and a == simple_root(F[1]):
                continue
            for k in cfg.field(a).units():
                gens.append(am.from_borel(cfg, BorelElem(torus_one(cfg), UPlusWord.letter(a, k))))
    return gens


def as_permutation(cfg, g, chambers, index):
    img = []
    for c in chambers:
        d = am.act_chamber(cfg, g, c)
        if d not in index:
            raise ValueError("facet group does not preserve the exhaustion")
        img.append(index[d])
    return Permutation(img)


def restricted_group(cfg, F, n, radius=None):
    chambers = exhaustion(cfg, F, n)
    index = {c: k for k, c in enumerate(chambers)}
    radius = radius or n + 3
    perms = [as_permutation(cfg, g, chambers, index) for g in facet_generators(cfg, F, radius)]
    perms = [p for p in perms if not p.is_Identity] or [Permutation(list(range(len(chambers))))]
    return PermutationGroup(perms), chambers, index


def parahoric_restrict(cfg, F, n, samples=200, seed=0):
    """U(F) on E_{n+1}, its kernel K_n onto E_n, and the orders of sampled
    kernel elements.  Each order must be a power of the characteristic of the
    crossed panel and divide its q; the single-characteristic reading
    "divides q_max" is reported separately."""
    F = _facet(F)
    sympy_seed(seed)
    G, big, index = restricted_group(cfg, F, n + 1)
    small = exhaustion(cfg, F, n)
    fixed = [index[c] for c in small]
    K = G.pointwise_stabilizer(fixed) if fixed else G
    t = crossed_type(F, n)
    q_panel = cfg.K[t].q if t is not None else 1
    p_panel = cfg.K[t].p if t is not None else 1
    orders = Counter()
    violations = 0
    literal = 0
    trivial = K.order() == 1
    for _ in range(samples):
        o = 1 if trivial else int(K.random().order())
        orders[o] += 1
        ok = q_panel % o == 0 and set(prime_factors(o)) <= {p_panel}
        violations += not ok
        literal += cfg.q_max % o != 0
    G_small, _, _ = restricted_group(cfg, F, n)
    return {
        "facet": F, "n": n,
        "chambers": len(big), "chambers_En": len(small),
        "group_order": int(G.order()), "restricted_order_En": int(G_small.order()),
        "kernel_order": int(K.order()), "crossed_type": t,
        "orders": dict(orders), "violations": violations,
        "q_max_violations": literal, "samples": samples,
        "passed": violations == 0,
    }


def commensurability_orbit(cfg, w, radius=None):
    """[Gamma : Gamma cap w Gamma w^-1] as the orbit size of the chamber w.E
    under U+ (generated by window root groups).  The stabilizer of a chamber in
    Gamma is its conjugate, so the index is this orbit size."""
    w = tuple(w)
    radius = radius or len(w) + 2
    gens = facet_generators(cfg, ("edge",), radius)
    start = tuple((i, cfg.K[i].zero) for i in w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for g in gens:
                d = am.act_chamber(cfg, g, c)
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
        frontier = nxt
    return len(seen)


def verify_commensurability(cfg, maxlen=2):
    rows = []
    for w in dinf_words(maxlen):
        a = commensurability_index(cfg, w)
        b = commensurability_orbit(cfg, w)
        rows.append((w, a, b))
    return {"passed": all(a == b for _, a, b in rows), "rows": rows}
