"""
Root systems of the two Weyl groups in play.

D_inf acts on the real line tiled by the intervals [k, k+1]; s0 is x -> -x,
s1 is x -> 2-x and the base chamber is E = [0, 1].  A root is a closed
half-line bounded by an integer vertex.

The right-angled r-gon group (r >= 5) has generators r_0..r_{r-1}, with r_i
commuting with r_{i+1} and no other relations.  Elements are ShortLex normal
forms (tuples of generator indices); the root w.a_i is stored with w the
shortest element of its coset modulo <r_{i-1}, r_{i+1}>.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import count

from twinlab.graphprod import insert_right, lex_normal


# ---------------------------------------------------------------- D_inf

PLUS, MINUS = 1, -1


class TreeRoot(tuple):
    """(n, d): the half-line {x >= n} when d = +1, {x <= n} when d = -1."""
    __slots__ = ()

    def __new__(cls, n, d):
        assert d in (PLUS, MINUS)
        return tuple.__new__(cls, (int(n), d))

    n = property(lambda self: self[0])
    d = property(lambda self: self[1])

    @property
    def type(self):
        return self[0] % 2

    def is_positive(self):
        n, d = self
        return (d == PLUS and n <= 0) or (d == MINUS and n >= 1)

    @property
    def eps(self):
        return tree_eps(self[0])

    def __neg__(self):
        return TreeRoot(self[0], -self[1])

    def contains_chamber(self, k):
        "is [k, k+1] inside the root"
        n, d = self
        return k >= n if d == PLUS else k + 1 <= n

    def contains(self, other):
        n, d = self
        m, e = other
        if d != e:
            return False
        return m >= n if d == PLUS else m <= n

    def reflect(self, i):
        n, d = self
        return TreeRoot(2*i - n, -d)

    def act(self, word):
        "w.a for a reduced D_inf word (letters applied right to left)"
        a = self
        for i in reversed(word):
            a = a.reflect(i)
        return a

    def sort_key(self):
        return (abs(2*self[0] - 1), self[1])

    def __repr__(self):
        return "[%d,+oo)" % self[0] if self[1] == PLUS else "(-oo,%d]" % self[0]


def tree_eps(n):
    "(-1)^m, m = number of vertices of the type of n strictly between 1/2 and n"
    m = (n - 1)//2 if n >= 1 else (-n)//2
    return -1 if m % 2 else 1


def simple_root(i):
    return TreeRoot(0, PLUS) if i == 0 else TreeRoot(1, MINUS)


def tree_root_sets(i):
    """The two streams P(a_i, 0) and P(a_i, 1), nearest the base chamber first."""
    if i == 0:
        s0 = (TreeRoot(-2*m, PLUS) for m in count())
        s1 = (TreeRoot(-1 - 2*m, PLUS) for m in count())
    else:
        s0 = (TreeRoot(2 + 2*m, MINUS) for m in count())
        s1 = (TreeRoot(1 + 2*m, MINUS) for m in count())
    return s0, s1


def positive_roots(i, radius):
    """Roots of P(a_i) whose vertex is within distance radius of the base chamber
    (vertex n with |2n - 1| <= 2 radius - 1), sorted."""
    out = []
    if i == 0:
        n = 0
        while abs(2*n - 1) <= 2*radius - 1:
            out.append(TreeRoot(n, PLUS))
            n -= 1
    else:
        n = 1
        while abs(2*n - 1) <= 2*radius - 1:
            out.append(TreeRoot(n, MINUS))
            n += 1
    return out


def block_of(a):
    "0 if a contains a_0, 1 if it contains a_1 (positive roots only)"
    assert a.is_positive(), a
    return 0 if a[1] == PLUS else 1


def tree_prenilpotent(a, b):
    return a.contains(b) or b.contains(a)


def dinf_reduce(word):
    out = []
    for i in word:
        if out and out[-1] == i:
            out.pop()
        else:
            out.append(i)
    return tuple(out)


def dinf_mul(v, w):
    return dinf_reduce(tuple(v) + tuple(w))


def dinf_inv(w):
    return tuple(reversed(w))


def dinf_chamber(w):
    "k such that w.E = [k, k+1]"
    x = Fraction(1, 2)
    for i in reversed(w):
        x = 2*i - x
    return int(x - Fraction(1, 2))


def dinf_word_of_chamber(k):
    "the reduced word w with w.E = [k, k+1]"
    w = []
    if k > 0:
        w = [1, 0]*k
        w = w[:k]
    elif k < 0:
        w = [0, 1]*(-k)
        w = w[:-k]
    return tuple(w)


def tree_phi(w):
    """Positive roots not containing the chamber w.E (the set
    Phi_{w^-1}); it has l(w) elements."""
    k = dinf_chamber(w)
    out = []
    if k > 0:
        for n in range(1, k+1):
            out.append(TreeRoot(n, MINUS))
    elif k < 0:
        for n in range(0, k, -1):
            out.append(TreeRoot(n, PLUS))
    return out


def dinf_words(maxlen):
    out = [()]
    for n in range(1, maxlen+1):
        out.append(tuple([0, 1]*n)[:n])
        out.append(tuple([1, 0]*n)[:n])
    return out


# ---------------------------------------------------------- r-gon group

def _check_rank(r):
    if r < 5:
        raise ValueError("the right-angled r-gon tiling needs r >= 5, got %r" % r)


def adjacent(i, j, r):
    return (i - j) % r in (1, r - 1)


@lru_cache(maxsize=200000)
def _reduce(letters, r):
    comm = lambda a, b: (a - b) % r in (1, r - 1)
    word = []
    for i in letters:
        word = insert_right(word, i % r, 1, comm, lambda e, f: None)
    return tuple(x for x, _ in lex_normal(word, comm, lambda x: x))


class PolygonWord(tuple):
    """ShortLex normal form of an element of the right-angled r-gon group."""
    __slots__ = ()

    def __new__(cls, letters, r):
        return tuple.__new__(cls, (_reduce(tuple(letters), r), r))

    letters = property(lambda self: self[0])
    r = property(lambda self: self[1])
    canonical = True

    def __len__(self):
        return len(self[0])

    def __mul__(self, other):
        if isinstance(other, PolygonWord):
            other = other[0]
        return PolygonWord(self[0] + tuple(other), self[1])

    def inverse(self):
        return PolygonWord(tuple(reversed(self[0])), self[1])

    def has_right_descent(self, i):
        r = self[1]
        for x in reversed(self[0]):
            if x == i:
                return True
            if not adjacent(x, i, r):
                return False
        return False

    def count(self, i):
        return self[0].count(i)

    def __repr__(self):
        return "w(" + ",".join(map(str, self[0])) + ")"


def polygon_reduce(word, r):
    _check_rank(r)
    return PolygonWord(word, r)


def polygon_length(word, r):
    return len(_reduce(tuple(word), r))


class PolygonRoot(tuple):
    """The root w.a_i, with w the shortest element of w<r_{i-1}, r_{i+1}>."""
    __slots__ = ()

    def __new__(cls, w, i, r=None):
        if isinstance(w, PolygonWord):
            r = w.r
            w = w.letters
        i = i % r
        lets = _reduce(tuple(w), r)
        side = ((i - 1) % r, (i + 1) % r)
        changed = True
        while changed:
            changed = False
            for j in side:
                pw = PolygonWord(lets, r)
                if pw.has_right_descent(j):
                    lets = _reduce(lets + (j,), r)
                    changed = True
        return tuple.__new__(cls, (lets, i, r))

    w = property(lambda self: PolygonWord(self[0], self[2]))
    i = property(lambda self: self[1])
    r = property(lambda self: self[2])

    @property
    def type(self):
        return self[1]

    def chamber(self):
        "a chamber of the root adjacent to its wall"
        return self[0]

    def contains(self, x):
        "is the chamber x (a letter tuple or PolygonWord) in the root"
        if isinstance(x, PolygonWord):
            x = x.letters
        w, i, r = self
        y = _reduce(tuple(reversed(w)) + tuple(x), r)
        return len(_reduce((i,) + y, r)) > len(y)

    def is_positive(self):
        return self.contains(())

    def __neg__(self):
        w, i, r = self
        return PolygonRoot(w + (i,), i, r)

    def act(self, g):
        "g.a for g a PolygonWord or letter tuple"
        if isinstance(g, PolygonWord):
            g = g.letters
        w, i, r = self
        return PolygonRoot(tuple(g) + w, i, r)

    def reflection(self):
        w, i, r = self
        return _reduce(w + (i,) + tuple(reversed(w)), r)

    @property
    def eps(self):
        "(-1)^(walls of the root's type crossed from the base to the wall)"
        b = self if self.is_positive() else -self
        return -1 if b[0].count(b[1]) % 2 else 1

    def sort_key(self):
        return (len(self[0]), self[0], self[1])

    def __repr__(self):
        return "%s.a%d" % (PolygonWord(self[0], self[2]), self[1])


def polygon_simple_root(i, r):
    return PolygonRoot((), i, r)


@lru_cache(maxsize=200000)
def polygon_prenilpotent(a, b):
    """Exact test.  Equal walls: prenilpotent iff a = b.  Crossing walls are
    orthogonal and always prenilpotent.  For parallel walls, a cap b is nonempty
    iff one root contains the other's wall-adjacent chamber, and likewise for
    the opposite roots."""
    if a == b:
        return True
    r = a.r
    ta, tb = a.reflection(), b.reflection()
    if ta == tb:
        return False
    if _reduce(ta + tb, r) == _reduce(tb + ta, r):
        return True
    return _meets(a, b) and _meets(-a, -b)


def _meets(a, b):
    return b.contains(a.chamber()) or a.contains(b.chamber())


def walls_orthogonal(a, b):
    ta, tb = a.reflection(), b.reflection()
    r = a.r
    return ta != tb and _reduce(ta + tb, r) == _reduce(tb + ta, r)


def nested(a, b):
    "one root contains the other (decided on chambers adjacent to the walls)"
    if a == b:
        return True
    if walls_orthogonal(a, b) or a.reflection() == b.reflection():
        return False
    return polygon_prenilpotent(a, b)


def polygon_ball(r, radius):
    "all canonical elements of length <= radius, by levels"
    levels = [[()]]
    seen = {()}
    for n in range(radius):
        nxt = []
        for w in levels[-1]:
            for i in range(r):
                v = _reduce(w + (i,), r)
                if len(v) == n + 1 and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        nxt.sort()
        levels.append(nxt)
    return levels


def polygon_prenilpotent_window(a, b, radius=None):
    """Prenilpotency read off chamber sets inside a ball around the base."""
    if radius is None:
        radius = len(a[0]) + len(b[0]) + 2
    ab = nab = False
    for level in polygon_ball(a.r, radius):
        for x in level:
            ia, ib = a.contains(x), b.contains(x)
            ab = ab or (ia and ib)
            nab = nab or (not ia and not ib)
            if ab and nab:
                return True
    return False


def polygon_phi(w, r):
    """Positive roots not containing the chamber w (the set Phi_{w^-1})."""
    if not isinstance(w, PolygonWord):
        w = PolygonWord(w, r)
    out = []
    lets = w.letters
    for k in range(len(lets)):
        a = PolygonRoot(lets[:k], lets[k], r)
        out.append(a)
    return out


def polygon_positive_roots(r, maxlen):
    "positive roots w.a_i with l(w) <= maxlen"
    out = set()
    for level in polygon_ball(r, maxlen):
        for w in level:
            for i in range(r):
                a = PolygonRoot(w, i, r)
                if a.is_positive() and len(a[0]) <= maxlen:
                    out.add(a)
    return sorted(out, key=PolygonRoot.sort_key)


# ------------------------------------------------------- growth, covolume
#
# The growth function of the right-angled r-gon group is
#     W(t) = (1 + t)^2 / (1 - (r-2) t + t^2),
# so d_0 = 1, d_1 = r, d_2 = r(r-2) and d_n = (r-2) d_{n-1} - d_{n-2} for n >= 3.
# The geometric sequence r(r-2)^(n-1) agrees up to n = 2 and is an upper
# bound afterwards (d_3 = 40 < 45 for r = 5).

def growth_series(r, N, check=False):
    """d_0..d_N, the number of elements of each length.  With check=True the
    values are compared with a breadth-first enumeration of normal forms."""
    _check_rank(r)
    d = [1, r, r*(r - 2)][:N + 1]
    while len(d) < N + 1:
        d.append((r - 2)*d[-1] - d[-2])
    if check:
        bfs = [len(level) for level in polygon_ball(r, N)]
        if bfs != d:
            raise AssertionError("growth recurrence %s disagrees with enumeration %s" % (d, bfs))
    return d


def growth_bound(r, N):
    "the geometric majorant 1, r, r(r-2), r(r-2)^2, ..."
    _check_rank(r)
    return [1] + [r*(r - 2)**(n - 1) for n in range(1, N + 1)]


def growth_rate(r):
    "exponential growth rate, the largest root of x^2 - (r-2)x + 1"
    a = r - 2
    return (a + (a*a - 4)**0.5)/2


class _Divergent(object):
    def __repr__(self):
        return "divergent"
    __str__ = __repr__


Divergent = _Divergent()


def covolume(r, q):
    """sum_n d_n / q^n = (q+1)^2 / (q^2 - (r-2) q + 1), finite iff q > growth
    rate, i.e. iff q >= r - 2 for integer q."""
    _check_rank(r)
    if q < 2:
        raise ValueError("thickness parameter q must be >= 2")
    if q < r - 2:
        return Divergent
    return Fraction((q + 1)**2, q*q - (r - 2)*q + 1)


def covolume_bound(r, q):
    """sum_n r(r-2)^(n-1) / q^n = 1 + r/(q - r + 2), the majorant series,
    finite iff q >= r - 1"""
    _check_rank(r)
    if q < r - 1:
        return Divergent
    return 1 + Fraction(r, q - r + 2)


def covolume_partial(r, q, N):
    return sum(Fraction(dn, q**n) for n, dn in enumerate(growth_series(r, N)))


def covolume_tail(r, q, N):
    """exact value of sum_{n > N} d_n / q^n for N >= 1, from the recurrence:
    (d_{N+1} x^{N+1} - d_N x^{N+2}) / (1 - (r-2) x + x^2), x = 1/q"""
    assert N >= 1
    d = growth_series(r, N + 1)
    x = Fraction(1, q)
    return (d[N + 1]*x**(N + 1) - d[N]*x**(N + 2))/(1 - (r - 2)*x + x*x)
