"""Exact scalars in Q(w), w a primitive cube root of unity, with at most one
extra quadratic layer K(r).

Elements of the base field are stored as pairs (a, b) meaning a + b*w with
w^2 = -1 - w.  Elements of a quadratic layer are stored as four rationals
(a, b, c, d) meaning (a + b*w) + (c + d*w)*r where r^2 + p*r + q = 0.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional, Sequence

__all__ = [
    "TowerError", "Reducible", "TowerDepthExceeded", "ScalarParseError",
    "FieldTower", "Scalar", "BASE", "ZETA", "adjoin_quadratic", "normalize",
    "parse_scalar", "as_scalar", "roots_in_field", "sqrt_base",
]


class TowerError(Exception):
    pass


class Reducible(TowerError):
    """The proposed minimal polynomial splits over the current top layer."""

    def __init__(self, msg, roots=()):
        super().__init__(msg)
        self.roots = tuple(roots)


class TowerDepthExceeded(TowerError):
    pass


class ScalarParseError(ValueError):
    pass


F0 = Fraction(0)
F1 = Fraction(1)

# -- base field Q(w) on pairs -------------------------------------------------


def _bmul(x, y):
    a, b = x
    c, d = y
    bd = b * d
    return (a * c - bd, a * d + b * c - bd)


def _binv(x):
    a, b = x
    n = a * a - a * b + b * b
    if n == 0:
        raise ZeroDivisionError("division by zero scalar")
    # conjugate of a + b w is (a - b) - b w
    return ((a - b) / n, -b / n)


def _badd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _bsub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _bneg(x):
    return (-x[0], -x[1])


def _bnorm(x):
    a, b = x
    return a * a - a * b + b * b


def _fsqrt(q: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _bsqrt(x):
    """Square root in Q(w) of the pair x, or None when x is not a square.

    Work in the basis 1, s with s = sqrt(-3) = 1 + 2w: x = u + v*s.  A root
    p + q*s has norm p^2 + 3q^2 = sqrt(u^2 + 3v^2).
    """
    a, b = x
    if a == 0 and b == 0:
        return (F0, F0)
    u = a - b / 2
    v = b / 2
    n = _fsqrt(u * u + 3 * v * v)
    if n is None:
        return None
    p = _fsqrt((u + n) / 2)
    if p is not None and p != 0:
        q = v / (2 * p)
    else:
        q2 = (n - u) / 6
        q = _fsqrt(q2)
        if q is None:
            return None
        p = F0
        if q != 0 and 2 * p * q != v:
            return None
    if p * p - 3 * q * q != u or 2 * p * q != v:
        return None
    # p + q s = (p + q) + 2q w
    return (p + q, 2 * q)


# -- towers -------------------------------------------------------------------


class FieldTower:
    """Q(w), optionally extended by one root r of x^2 + p x + q."""

    __slots__ = ("quad",)

    def __init__(self, quad=None):
        # quad: None or (p, q), each a base pair of Fractions
        self.quad = quad

    @property
    def degree(self) -> int:
        """Absolute degree over Q."""
        return 2 if self.quad is None else 4

    @property
    def depth(self) -> int:
        return 0 if self.quad is None else 1

    @property
    def minpolys(self):
        out = ["w^2 + w + 1"]
        if self.quad is not None:
            p = Scalar(BASE, self.quad[0])
            q = Scalar(BASE, self.quad[1])
            out.append(_fmt_poly([q, p, Scalar(BASE, (F1, F0))], "r"))
        return out

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self.quad == other.quad

    def __hash__(self):
        return hash(("tower", self.quad))

    def __repr__(self):
        if self.quad is None:
            return "FieldTower(Q(w))"
        return "FieldTower(Q(w)[r]/(%s))" % self.minpolys[1]

    def zero(self) -> "Scalar":
        return Scalar(self, (F0,) * self.degree)

    def one(self) -> "Scalar":
        return Scalar(self, (F1,) + (F0,) * (self.degree - 1))

    def w(self) -> "Scalar":
        return Scalar(self, (F0, F1) + (F0,) * (self.degree - 2))

    def gen(self) -> "Scalar":
        if self.quad is None:
            raise TowerError("base tower has no quadratic generator")
        return Scalar(self, (F0, F0, F1, F0))

    def embed(self, s: "Scalar") -> "Scalar":
        if s.tower == self:
            return s
        if s.tower.quad is None:
            return Scalar(self, s.c + (F0,) * (self.degree - 2))
        raise TowerError("cannot embed %r into %r" % (s.tower, self))

    def adjoin_quadratic(self, minpoly) -> "FieldTower":
        return adjoin_quadratic(self, minpoly)


BASE = FieldTower()


def adjoin_quadratic(tower: FieldTower, minpoly) -> FieldTower:
    """Return a new tower with a root of ``minpoly`` adjoined.

    ``minpoly`` is a coefficient sequence ``[c0, c1, 1]`` (lowest degree
    first) or a string in the variable ``r``/``x``.
    """
    if isinstance(minpoly, str):
        coeffs = _parse_univariate(minpoly, tower)
    else:
        coeffs = [as_scalar(c, tower) for c in minpoly]
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if len(coeffs) != 3:
        raise TowerError("minimal polynomial must have degree 2")
    if coeffs[2] != 1:
        raise TowerError("minimal polynomial must be monic")
    if tower.quad is not None:
        raise TowerDepthExceeded("a quadratic layer is already present")
    q, p = coeffs[0], coeffs[1]
    disc = p * p - 4 * q
    root = _bsqrt(disc.c)
    if root is not None:
        s = Scalar(BASE, root)
        raise Reducible("minimal polynomial splits over Q(w)",
                        roots=[(-p + s) / 2, (-p - s) / 2])
    return FieldTower((p.c[:2], q.c[:2]))


# -- scalars ------------------------------------------------------------------


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected exact rational, got %r" % type(x).__name__)


class Scalar:
    """Immutable element of a FieldTower."""

    __slots__ = ("tower", "c")

    def __init__(self, tower: FieldTower, coords: Sequence):
        if len(coords) != tower.degree:
            raise ValueError("coordinate vector has wrong length")
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "c", tuple(_frac(x) for x in coords))

    def __setattr__(self, k, v):
        raise AttributeError("Scalar is immutable")

    # construction
    @staticmethod
    def rational(q, tower: FieldTower = BASE) -> "Scalar":
        return Scalar(tower, (_frac(q) if not isinstance(q, Fraction) else q,)
                      + (F0,) * (tower.degree - 1))

    @staticmethod
    def base(a, b=0) -> "Scalar":
        return Scalar(BASE, (_frac(a), _frac(b)))

    # predicates
    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def in_base(self) -> bool:
        return self.tower.quad is None or not (self.c[2] or self.c[3])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return self.c[0]

    def lower(self) -> "Scalar":
        """The same element in the base tower (must lie there)."""
        if not self.in_base():
            raise TowerError("element does not lie in Q(w)")
        return Scalar(BASE, self.c[:2])

    # coercion
    def _co(self, other):
        if isinstance(other, Scalar):
            if other.tower is self.tower or other.tower == self.tower:
                return self, other
            if self.tower.quad is None:
                return other.tower.embed(self), other
            if other.tower.quad is None:
                return self, self.tower.embed(other)
            raise TowerError("incompatible towers")
        if isinstance(other, (int, Fraction)):
            return self, Scalar.rational(other, self.tower)
        return None

    def __add__(self, other):
        pr = self._co(other)
        if pr is None:
            return NotImplemented
        x, y = pr
        return Scalar(x.tower, tuple(a + b for a, b in zip(x.c, y.c)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.tower, tuple(-a for a in self.c))

    def __sub__(self, other):
        pr = self._co(other)
        if pr is None:
            return NotImplemented
        x, y = pr
        return Scalar(x.tower, tuple(a - b for a, b in zip(x.c, y.c)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar(self.tower, tuple(a * other for a in self.c))
        pr = self._co(other)
        if pr is None:
            return NotImplemented
        x, y = pr
        if x.tower.quad is None:
            return Scalar(x.tower, _bmul(x.c, y.c))
        p, q = x.tower.quad
        X, Y = x.c[:2], x.c[2:]
        U, V = y.c[:2], y.c[2:]
        YV = _bmul(Y, V)
        lo = _bsub(_bmul(X, U), _bmul(q, YV))
        hi = _bsub(_badd(_bmul(X, V), _bmul(Y, U)), _bmul(p, YV))
        return Scalar(x.tower, lo + hi)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.tower.quad is None:
            return Scalar(self.tower, _binv(self.c))
        p, q = self.tower.quad
        X, Y = self.c[:2], self.c[2:]
        # (X + Y r)(X - pY - Y r) = X^2 - pXY + qY^2
        cX = _bsub(X, _bmul(p, Y))
        cY = _bneg(Y)
        n = _badd(_bsub(_bmul(X, X), _bmul(p, _bmul(X, Y))), _bmul(q, _bmul(Y, Y)))
        ni = _binv(n)
        return Scalar(self.tower, _bmul(cX, ni) + _bmul(cY, ni))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar(self.tower, tuple(a / other for a in self.c))
        pr = self._co(other)
        if pr is None:
            return NotImplemented
        x, y = pr
        return x * y.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = self.tower.one()
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and not any(self.c[1:])
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.tower == other.tower:
            return self.c == other.c
        a, b = (self, other) if self.tower.degree >= other.tower.degree else (other, self)
        if b.tower.quad is None:
            return a.c == b.c + (F0,) * (a.tower.degree - 2)
        return False

    def __hash__(self):
        c = self.c
        if len(c) == 4 and not (c[2] or c[3]):
            c = c[:2]
        if not c[1] and len(c) == 2:
            return hash(c[0])
        return hash(c)

    def __bool__(self):
        return not self.is_zero()

    # field-specific helpers
    def conj(self) -> "Scalar":
        """Complex conjugation w -> w^2 on the base field."""
        if self.tower.quad is not None:
            raise TowerError("conjugation only defined on Q(w)")
        a, b = self.c
        return Scalar(BASE, (a - b, -b))

    def norm(self) -> Fraction:
        """Norm from Q(w) to Q, x^2 - xy + y^2 for x + y w."""
        if self.tower.quad is not None:
            return self.lower().norm()
        return _bnorm(self.c)

    def sqrt(self):
        """Exact square root inside the same tower, or None."""
        if self.tower.quad is None:
            r = _bsqrt(self.c)
            return None if r is None else Scalar(BASE, r)
        if self.in_base():
            r = _bsqrt(self.c[:2])
            if r is not None:
                return Scalar(self.tower, r + (F0, F0))
        cands = roots_in_field([-self, self.tower.zero(), self.tower.one()], self.tower)
        return cands[0] if cands else None

    def __repr__(self):
        return "Scalar(%s)" % self

    def __str__(self):
        return _fmt_scalar(self)

    def to_json(self):
        return str(self)


def normalize(s: Scalar) -> Scalar:
    """Canonical representative (coordinates are always reduced)."""
    return Scalar(s.tower, s.c)


ZETA = BASE.w()


def as_scalar(x, tower: Optional[FieldTower] = None) -> Scalar:
    if isinstance(x, Scalar):
        if tower is None or x.tower == tower:
            return x
        return tower.embed(x)
    tower = tower or BASE
    if isinstance(x, (int, Fraction)):
        return Scalar.rational(x, tower)
    if isinstance(x, str):
        return parse_scalar(x, tower)
    raise TypeError("cannot convert %r to Scalar" % (x,))


def sqrt_base(x: Scalar):
    return x.sqrt()


# -- formatting -----------------------------------------------------------------


def _fmt_rat_term(q: Fraction, sym: str, first: bool) -> str:
    if q == 0:
        return ""
    sign = "-" if q < 0 else ("" if first else "+")
    a = abs(q)
    if sym:
        if a == 1:
            body = sym
        else:
            body = "%s*%s" % (a, sym)
    else:
        body = str(a)
    return sign + body


def _fmt_base(c) -> str:
    out = ""
    for q, sym in ((c[0], ""), (c[1], "w")):
        t = _fmt_rat_term(q, sym, out == "")
        out += t
    return out or "0"


def _fmt_scalar(s: Scalar) -> str:
    if s.tower.quad is None or not (s.c[2] or s.c[3]):
        return _fmt_base(s.c[:2])
    lo = s.c[:2]
    hi = s.c[2:]
    hs = _fmt_base(hi)
    if hi[0] and hi[1]:
        hterm = "(%s)*r" % hs
    elif hs == "1":
        hterm = "r"
    elif hs == "-1":
        hterm = "-r"
    else:
        hterm = hs + "*r"
    if not any(lo):
        return hterm
    ls = _fmt_base(lo)
    if lo[0] and lo[1]:
        ls = "(%s)" % ls
    if hterm.startswith("-"):
        return ls + hterm
    return ls + "+" + hterm


def _fmt_poly(coeffs, var):
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        mono = "" if k == 0 else (var if k == 1 else "%s^%d" % (var, k))
        cs = str(c)
        if mono and cs == "1":
            term = mono
        elif mono and cs == "-1":
            term = "-" + mono
        elif mono:
            term = ("(%s)" % cs if ("+" in cs[1:] or "-" in cs[1:]) else cs) + "*" + mono
        else:
            term = cs
        parts.append(term)
    if not parts:
        return "0"
    s = parts[0]
    for p in parts[1:]:
        s += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return s


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1))))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2)))
        else:
            toks.append(("op", m.group(3)))
    return toks


class _PolyParser:
    """Recursive-descent parser producing {exponent tuple: Scalar}.

    Grammar: sums of products; a product is a run of factors joined by '*',
    '/' or juxtaposition; a factor is an atom with an optional '^n'.
    """

    def __init__(self, text, tower, variables):
        self.toks = _tokenize(text)
        self.i = 0
        self.tower = tower
        self.vars = tuple(variables)
        self.n = len(self.vars)
        self.text = text

    def fail(self, msg):
        raise ScalarParseError("%s in %r" % (msg, self.text))

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def const(self, s):
        return {(0,) * self.n: s}

    def parse(self):
        if not self.toks:
            self.fail("empty expression")
        out = self.expr()
        if self.i != len(self.toks):
            self.fail("unexpected token %r" % (self.peek()[1],))
        return out

    def expr(self):
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = _pscale(acc, -1)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = _padd(acc, t if val == "+" else _pscale(t, -1))
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = _pmul(acc, self.power(), self.n)
            elif kind == "op" and val == "/":
                self.take()
                d = self.power()
                if len(d) != 1:
                    self.fail("division by a non-monomial")
                (e, c), = d.items()
                acc = _pmul(acc, {tuple(-k for k in e): c.inverse()}, self.n)
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                acc = _pmul(acc, self.power(), self.n)
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            neg = False
            kind, val = self.peek()
            if kind == "op" and val == "-":
                self.take()
                neg = True
            kind, val = self.take()
            if kind != "num":
                self.fail("exponent must be an integer")
            if neg:
                if len(base) != 1:
                    self.fail("negative power of a non-monomial")
                (e, c), = base.items()
                if c.is_zero():
                    self.fail("division by zero")
                return {tuple(-k * val for k in e): c ** (-val)}
            out = self.const(self.tower.one())
            for _ in range(val):
                out = _pmul(out, base, self.n)
            return out
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.const(Scalar.rational(val, self.tower))
        if kind == "name":
            if val in self.vars:
                e = [0] * self.n
                e[self.vars.index(val)] = 1
                return {tuple(e): self.tower.one()}
            if val == "w":
                return self.const(self.tower.w())
            if val == "r":
                if self.tower.quad is None:
                    self.fail("generator r used but no quadratic layer declared")
                return self.const(self.tower.gen())
            self.fail("unknown symbol %r" % val)
        if kind == "op" and val == "(":
            e = self.expr()
            k2, v2 = self.take()
            if v2 != ")":
                self.fail("missing ')'")
            return e
        self.fail("unexpected token %r" % (val,))


def _padd(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = v if s is None else s + v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def _pscale(a, c):
    out = {}
    for k, v in a.items():
        s = v * c
        if not s.is_zero():
            out[k] = s
    return out


def _pmul(a, b, n):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(ka[i] + kb[i] for i in range(n))
            s = va * vb
            t = out.get(k)
            out[k] = s if t is None else t + s
    return {k: v for k, v in out.items() if not v.is_zero()}


def parse_polynomial(text: str, tower: FieldTower, variables: Sequence[str]):
    """Parse ``text`` into a sparse map exponent-tuple -> Scalar."""
    return _PolyParser(text, tower, variables).parse()


def parse_scalar(text: str, tower: FieldTower = BASE) -> Scalar:
    d = _PolyParser(text, tower, ()).parse()
    return d.get((), tower.zero())


def _parse_univariate(text: str, tower: FieldTower):
    var = "x" if re.search(r"\bx\b", text) else "r"
    if var == "r":
        # 'r' here names the polynomial variable rather than a generator
        d = _PolyParser(text, tower, ("r",)).parse()
    else:
        d = _PolyParser(text, tower, ("x",)).parse()
    deg = max((k[0] for k in d), default=0)
    return [d.get((k,), tower.zero()) for k in range(deg + 1)]


# -- univariate polynomials over a tower -------------------------------------
# Lists of Scalars, lowest degree first, no trailing zeros.


def _ustrip(p):
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def udivmod(a, b):
    a = _ustrip(a)
    b = _ustrip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = b[-1].inverse()
    q = [None] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv
        q[k] = c
        if not c.is_zero():
            for i, bi in enumerate(b):
                r[k + i] = r[k + i] - c * bi
    r = _ustrip(r[: len(b) - 1])
    zero = b[0].tower.zero() if b else None
    q = [x if x is not None else zero for x in q]
    return _ustrip(q), r


def ugcd(a, b):
    a = _ustrip(a)
    b = _ustrip(b)
    while b:
        _, r = udivmod(a, b)
        a, b = b, r
    if not a:
        return a
    inv = a[-1].inverse()
    return [x * inv for x in a]


def uderiv(a):
    return _ustrip([a[k] * k for k in range(1, len(a))])


def ueval(a, x):
    acc = None
    for c in reversed(a):
        acc = c if acc is None else acc * x + c
    if acc is None:
        return x * 0
    return acc


def usquarefree(a):
    a = _ustrip(a)
    if len(a) <= 2:
        return a
    g = ugcd(a, uderiv(a))
    if len(g) <= 1:
        return a
    q, _ = udivmod(a, g)
    return q


# -- root finding ---------------------------------------------------------------


def _mp():
    import mpmath
    return mpmath


def _cplx(mp, s: Scalar, wv, rv):
    a, b = s.c[0], s.c[1]
    z = mp.mpf(a.numerator) / a.denominator + (mp.mpf(b.numerator) / b.denominator) * wv
    if len(s.c) == 4:
        c, d = s.c[2], s.c[3]
        z += (mp.mpf(c.numerator) / c.denominator + (mp.mpf(d.numerator) / d.denominator) * wv) * rv
    return z


def _to_frac(mp, x, maxden):
    sign, man, exp, _ = mp.mpf(x)._mpf_
    f = Fraction(int(man)) * (Fraction(2) ** int(exp))
    if sign:
        f = -f
    return f.limit_denominator(maxden)


def _recon_base(mp, z, maxden):
    sq3 = mp.sqrt(3)
    v = 2 * mp.im(z) / sq3
    u = mp.re(z) + v / 2
    return (_to_frac(mp, u, maxden), _to_frac(mp, v, maxden))


def _height_digits(coeffs):
    h = 1
    for c in coeffs:
        for q in c.c:
            h = max(h, abs(q.numerator), q.denominator)
    return len(str(h))


def roots_in_field(coeffs, tower: FieldTower = None):
    """Distinct roots lying in ``tower`` of the polynomial with the given
    coefficients (lowest degree first).

    Linear and (over Q(w)) quadratic cases are solved in closed form.  Higher
    degrees use high-precision complex root location only to propose
    candidates; every returned root is verified by exact substitution.
    """
    coeffs = list(coeffs)
    if tower is None:
        tower = BASE
        for c in coeffs:
            if isinstance(c, Scalar) and c.tower.degree > tower.degree:
                tower = c.tower
    p = _ustrip([as_scalar(c, tower) for c in coeffs])
    if len(p) <= 1:
        return []
    p = usquarefree(p)
    inv = p[-1].inverse()
    p = [c * inv for c in p]
    n = len(p) - 1
    if n == 1:
        return [-p[0]]
    if n == 2 and tower.quad is None:
        disc = p[1] * p[1] - 4 * p[0]
        s = disc.sqrt()
        if s is None:
            return []
        r1 = (-p[1] + s) / 2
        r2 = (-p[1] - s) / 2
        return _sorted_unique([r1, r2])
    found = _numeric_roots(p, tower)
    return _sorted_unique(found)


def _sorted_unique(xs):
    out = []
    for x in xs:
        if not any(x == y for y in out):
            out.append(x)
    out.sort(key=lambda s: s.c)
    return out


def _numeric_roots(p, tower):
    mp = _mp()
    n = len(p) - 1
    digits = _height_digits(p)
    dps = max(40, 8 * digits + 20)
    found = []
    for attempt in range(4):
        with mp.workdps(dps):
            wv = mp.mpc(-0.5, mp.sqrt(3) / 2)
            maxden = 10 ** max(6, dps // 3)
            if tower.quad is None:
                cs = [_cplx(mp, c, wv, 0) for c in reversed(p)]
                try:
                    zs = mp.polyroots(cs, maxsteps=400, extraprec=4 * dps)
                except mp.NoConvergence:
                    zs = []
                for z in zs:
                    cand = Scalar(BASE, _recon_base(mp, z, maxden))
                    if ueval(p, cand).is_zero() and not any(cand == f for f in found):
                        found.append(cand)
            else:
                pq, qq = tower.quad
                P = _cplx(mp, Scalar(BASE, pq), wv, 0)
                Q = _cplx(mp, Scalar(BASE, qq), wv, 0)
                d = mp.sqrt(P * P - 4 * Q)
                rho1, rho2 = (-P + d) / 2, (-P - d) / 2
                roots = []
                for rho in (rho1, rho2):
                    cs = [_cplx(mp, c, wv, rho) for c in reversed(p)]
                    try:
                        roots.append(mp.polyroots(cs, maxsteps=400, extraprec=4 * dps))
                    except mp.NoConvergence:
                        roots.append([])
                for z1 in roots[0]:
                    for z2 in roots[1]:
                        B = (z1 - z2) / (rho1 - rho2)
                        A = z1 - B * rho1
                        a = _recon_base(mp, A, maxden)
                        b = _recon_base(mp, B, maxden)
                        cand = Scalar(tower, a + b)
                        if ueval(p, cand).is_zero() and not any(cand == f for f in found):
                            found.append(cand)
        if len(found) == n:
            break
        dps *= 2
    return found
