"""
Small finite fields GF(p^k).

Elements are stored as integers 0 <= v < q whose base-p digits are the
polynomial coefficients (digit j is the coefficient of x^j).  Products go
through log/exp tables, built once per context.
"""

from functools import lru_cache

MAX_Q = 2**16


class FieldError(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d*d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n):
    fs = []
    d = 2
    while d*d <= n:
        if n % d == 0:
            fs.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        fs.append(n)
    return fs


# dense polynomials over GF(p), low degree first

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, m, p):
    a = _trim(a)
    m = _trim(m)
    inv = pow(m[-1], p-2, p)
    while len(a) >= len(m):
        c = a[-1]*inv % p
        shift = len(a) - len(m)
        for j, mj in enumerate(m):
            a[shift+j] = (a[shift+j] - c*mj) % p
        a = _trim(a)
    return a


def _polymul(a, b, p):
    if not a or not b:
        return []
    out = [0]*(len(a)+len(b)-1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i+j] = (out[i+j] + x*y) % p
    return out


def _monic(d, n, p):
    "the n-th monic polynomial of degree d, high coefficients most significant"
    cs = []
    for _ in range(d):
        cs.append(n % p)
        n //= p
    return cs + [1]


def is_irreducible(poly, p):
    poly = _trim(poly)
    k = len(poly) - 1
    if k <= 1:
        return k == 1
    for d in range(1, k//2 + 1):
        for n in range(p**d):
            if not _polymod(poly, _monic(d, n, p), p):
                return False
    return True


def smallest_irreducible(p, k):
    for n in range(p**k):
        poly = _monic(k, n, p)
        if k == 1 or poly[0] != 0:
            if is_irreducible(poly, p):
                return tuple(poly)
    raise FieldError("no irreducible polynomial of degree %d over GF(%d)" % (k, p))


class FieldCtx(object):
    """GF(p^k).  Use field_new to get the shared instance for (p, k)."""

    def __init__(self, p, k):
        if not is_prime(p):
            raise FieldError("%r is not prime" % (p,))
        if k < 1:
            raise FieldError("degree must be >= 1")
        if p**k > MAX_Q:
            raise FieldError("GF(%d^%d) exceeds the supported size 2^16" % (p, k))
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            self.modulus = (0, 1)   # placeholder x
        else:
            self.modulus = smallest_irreducible(p, k)
        self._build()
        self.zero = FieldElem(self, 0)
        self.one = FieldElem(self, 1)

    def _digits(self, v):
        p = self.p
        ds = []
        for _ in range(self.k):
            ds.append(v % p)
            v //= p
        return ds

    def _undigits(self, ds):
        v = 0
        for d in reversed(ds):
            v = v*self.p + d
        return v

    def _build(self):
        p, k, q = self.p, self.k, self.q
        if k == 1:
            g = 1 if q == 2 else self._prime_root()
            exp = [1]
            for _ in range(q-2):
                exp.append(exp[-1]*g % p)
        else:
            exp = self._poly_exp_table()
        log = [None]*q
        for e, v in enumerate(exp):
            log[v] = e
        assert len(exp) == q-1 and all(log[v] is not None for v in range(1, q))
        self._exp = exp + exp
        self._log = log

    def _prime_root(self):
        p = self.p
        fs = prime_factors(p-1)
        for g in range(2, p):
            if all(pow(g, (p-1)//f, p) != 1 for f in fs):
                return g
        raise FieldError("no primitive root")   # pragma: no cover

    def _poly_exp_table(self):
        p, q, m = self.p, self.q, self.modulus
        for gv in range(p, q):
            g = self._digits(gv)
            exp = [1]
            cur = [1]
            ok = True
            for _ in range(q-2):
                cur = _polymod(_polymul(cur, g, p), m, p)
                v = self._undigits(cur + [0]*(self.k-len(cur)))
                if v == 1:
                    ok = False
                    break
                exp.append(v)
            if ok:
                return exp
        raise FieldError("no primitive element")   # pragma: no cover

    # raw integer arithmetic, used by FieldElem

    def _add(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        if self.k == 1:
            return (a+b) % p
        v, m = 0, 1
        while a or b:
            v += ((a % p + b % p) % p)*m
            a //= p
            b //= p
            m *= p
        return v

    def _neg(self, a):
        p = self.p
        if p == 2 or a == 0:
            return a
        if self.k == 1:
            return p - a
        v, m = 0, 1
        while a:
            v += ((-a) % p)*m
            a //= p
            m *= p
        return v

    def _mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in %s" % self)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q-1)]

    # construction

    def __call__(self, n):
        "image of the integer n (prime subfield), or pass through a FieldElem"
        if isinstance(n, FieldElem):
            if n.ctx is not self:
                raise FieldError("element of %s used in %s" % (n.ctx, self))
            return n
        return FieldElem(self, int(n) % self.p)

    def elem(self, coeffs):
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.k:
            coeffs = _polymod(coeffs, self.modulus, self.p) if self.k > 1 else [sum(coeffs) % self.p]
        coeffs = coeffs + [0]*(self.k - len(coeffs))
        return FieldElem(self, self._undigits(coeffs))

    def from_int(self, v):
        "element with integer code v (0 <= v < q)"
        assert 0 <= v < self.q
        return FieldElem(self, v)

    def gen(self):
        "the class of x (a primitive element when k = 1 is not implied)"
        return self.elem([0, 1]) if self.k > 1 else self.one

    def primitive(self):
        return FieldElem(self, self._exp[1])

    def elements(self):
        return [FieldElem(self, v) for v in range(self.q)]

    def units(self):
        return [FieldElem(self, v) for v in range(1, self.q)]

    def __repr__(self):
        if self.k == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.k)

    __str__ = __repr__

    def spec(self):
        return "%d" % self.p if self.k == 1 else "%d^%d" % (self.p, self.k)


class FieldElem(object):
    __slots__ = ("ctx", "v")

    def __init__(self, ctx, v):
        self.ctx = ctx
        self.v = v

    @property
    def coeffs(self):
        return tuple(self.ctx._digits(self.v))

    def _other(self, b):
        if isinstance(b, FieldElem):
            if b.ctx is not self.ctx:
                raise FieldError("mixed fields: %s and %s" % (self.ctx, b.ctx))
            return b.v
        if isinstance(b, int):
            return int(b) % self.ctx.p
        return NotImplemented

    def __add__(self, b):
        w = self._other(b)
        if w is NotImplemented:
            return w
        return FieldElem(self.ctx, self.ctx._add(self.v, w))
    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx._neg(self.v))

    def __sub__(self, b):
        w = self._other(b)
        if w is NotImplemented:
            return w
        return FieldElem(self.ctx, self.ctx._add(self.v, self.ctx._neg(w)))

    def __rsub__(self, b):
        return (-self) + b

    def __mul__(self, b):
        w = self._other(b)
        if w is NotImplemented:
            return w
        return FieldElem(self.ctx, self.ctx._mul(self.v, w))
    __rmul__ = __mul__

    def inv(self):
        return FieldElem(self.ctx, self.ctx._inv(self.v))

    def __truediv__(self, b):
        w = self._other(b)
        if w is NotImplemented:
            return w
        return FieldElem(self.ctx, self.ctx._mul(self.v, self.ctx._inv(w)))

    def __rtruediv__(self, b):
        return self.inv()*b

    def __pow__(self, n):
        if self.v == 0:
            if n < 0:
                raise ZeroDivisionError("inverse of zero")
            return self if n else self.ctx.one
        ctx = self.ctx
        e = (ctx._log[self.v]*n) % (ctx.q-1)
        return FieldElem(ctx, ctx._exp[e])

    def __bool__(self):
        return self.v != 0

    def __eq__(self, b):
        if isinstance(b, FieldElem):
            return self.ctx is b.ctx and self.v == b.v
        if isinstance(b, int):
            return self.v == b % self.ctx.p if self.v < self.ctx.p else False
        return NotImplemented

    def __ne__(self, b):
        r = self.__eq__(b)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.k, self.v))

    def __lt__(self, b):
        return self.v < self._other(b)

    def __int__(self):
        return self.v

    def __repr__(self):
        ctx = self.ctx
        if ctx.k == 1:
            return str(self.v)
        terms = []
        for j, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else "x^%d" % j)
            if c == 1 and mono:
                terms.append(mono)
            else:
                terms.append(str(c) + mono)
        return "+".join(terms) or "0"


@lru_cache(maxsize=None)
def field_new(p, k=1):
    return FieldCtx(p, k)


def parse_field(s):
    """'3' -> GF(3), '2^2' -> GF(4).  A bare prime power such as '4' is also accepted."""
    s = str(s).strip()
    try:
        if "^" in s:
            p, k = s.split("^")
            return field_new(int(p), int(k))
        n = int(s)
    except ValueError:
        raise FieldError("bad field spec %r" % s)
    if is_prime(n):
        return field_new(n, 1)
    for p in prime_factors(n)[:1]:
        k = 0
        m = n
        while m % p == 0:
            m //= p
            k += 1
        if m == 1:
            return field_new(p, k)
    raise FieldError("%d is not a prime power" % n)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def inv(a):
    return a.inv()
