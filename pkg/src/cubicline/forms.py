"""Homogeneous ternary and binary forms of degree <= 3, projective
transformations acting by g.F(x) = F(g^{-1} x), and one-parameter Laurent
families of cubic/line pairs.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .scalars import (BASE, FieldTower, Scalar, ScalarParseError, as_scalar,
                      parse_polynomial, roots_in_field, ugcd, uderiv, _padd,
                      _pmul, _pscale)

Exp = Tuple[int, int, int]
VARS = ("x0", "x1", "x2")
T_MIN, T_MAX = -12, 12


class FormError(ValueError):
    pass


class ZeroFormAtLimit(FormError):
    pass


def _common_tower(scalars: Iterable[Scalar]) -> FieldTower:
    tw = BASE
    for s in scalars:
        if s.tower.quad is not None:
            if tw.quad is not None and tw != s.tower:
                raise FormError("coefficients from incompatible towers")
            tw = s.tower
    return tw


def monomials(d: int) -> List[Exp]:
    """Exponent triples of degree d in the canonical order (x0^d first)."""
    out = []
    for e0 in range(d, -1, -1):
        for e1 in range(d - e0, -1, -1):
            out.append((e0, e1, d - e0 - e1))
    return out


class TernaryForm:
    __slots__ = ("degree", "coeffs", "tower")

    def __init__(self, coeffs: Dict[Exp, Scalar], degree: Optional[int] = None,
                 tower: Optional[FieldTower] = None):
        cl = {tuple(k): as_scalar(v) if not isinstance(v, Scalar) else v
              for k, v in coeffs.items()}
        cl = {k: v for k, v in cl.items() if not v.is_zero()}
        if not cl:
            raise FormError("the zero form is not a valid TernaryForm")
        degs = {sum(k) for k in cl}
        if len(degs) != 1:
            raise FormError("form is not homogeneous")
        d = degs.pop()
        if degree is not None and d != degree:
            raise FormError("expected degree %d, got %d" % (degree, d))
        if not 0 <= d <= 3:
            raise FormError("degree must be at most 3")
        tw = tower or _common_tower(cl.values())
        cl = {k: (tw.embed(v) if v.tower != tw else v) for k, v in cl.items()}
        self.degree = d
        self.coeffs = cl
        self.tower = tw

    # construction helpers
    @classmethod
    def parse(cls, text: str, tower: FieldTower = BASE, degree: Optional[int] = None):
        d = parse_polynomial(text, tower, VARS)
        if not d:
            raise ScalarParseError("expression %r is identically zero" % text)
        return cls(d, degree=degree, tower=tower)

    @classmethod
    def linear(cls, b0, b1, b2, tower: Optional[FieldTower] = None):
        return cls({(1, 0, 0): as_scalar(b0), (0, 1, 0): as_scalar(b1),
                    (0, 0, 1): as_scalar(b2)}, degree=1, tower=tower)

    @classmethod
    def from_cubic_coeffs(cls, a: Dict[Tuple[int, int], object], tower=None):
        """Build sum a_ij x0^{3-i-j} x1^i x2^j."""
        return cls({(3 - i - j, i, j): as_scalar(v) for (i, j), v in a.items()},
                   degree=3, tower=tower)

    def coeff(self, e: Exp) -> Scalar:
        c = self.coeffs.get(tuple(e))
        return c if c is not None else self.tower.zero()

    def a(self, i: int, j: int) -> Scalar:
        """Coefficient of x0^{3-i-j} x1^i x2^j."""
        return self.coeff((3 - i - j, i, j))

    def b(self, k: int) -> Scalar:
        e = [0, 0, 0]
        e[k] = 1
        return self.coeff(tuple(e))

    def line_coeffs(self) -> Tuple[Scalar, Scalar, Scalar]:
        if self.degree != 1:
            raise FormError("not a linear form")
        return (self.b(0), self.b(1), self.b(2))

    def support(self):
        return sorted(self.coeffs, reverse=True)

    # arithmetic
    def __mul__(self, other):
        if isinstance(other, TernaryForm):
            return TernaryForm(_pmul(self.coeffs, other.coeffs, 3))
        s = as_scalar(other, self.tower) if not isinstance(other, Scalar) else other
        return TernaryForm(_pscale(self.coeffs, s))

    __rmul__ = __mul__

    def __add__(self, other: "TernaryForm"):
        return TernaryForm(_padd(self.coeffs, other.coeffs))

    def __sub__(self, other: "TernaryForm"):
        return TernaryForm(_padd(self.coeffs, _pscale(other.coeffs, -1)))

    def __neg__(self):
        return TernaryForm(_pscale(self.coeffs, -1))

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def lead(self) -> Tuple[Exp, Scalar]:
        e = self.support()[0]
        return e, self.coeffs[e]

    def normalized(self) -> "TernaryForm":
        """Scale so that the first coefficient in canonical order is 1."""
        _, c = self.lead()
        if c == 1:
            return self
        inv = c.inverse()
        return TernaryForm({k: v * inv for k, v in self.coeffs.items()},
                           tower=self.tower)

    def proportional(self, other: "TernaryForm") -> bool:
        if self.degree != other.degree or set(self.coeffs) != set(other.coeffs):
            return False
        return self.normalized() == other.normalized()

    def evaluate(self, pt: Sequence) -> Scalar:
        acc = self.tower.zero()
        x = [as_scalar(v) if not isinstance(v, Scalar) else v for v in pt]
        for (e0, e1, e2), c in self.coeffs.items():
            acc = acc + c * (x[0] ** e0) * (x[1] ** e1) * (x[2] ** e2)
        return acc

    def partial(self, k: int):
        """Partial derivative in x_k; returns a coefficient dict (may be {})."""
        out = {}
        for e, c in self.coeffs.items():
            if e[k]:
                f = list(e)
                f[k] -= 1
                out[tuple(f)] = c * e[k]
        return out

    def partial_form(self, k: int) -> Optional["TernaryForm"]:
        d = self.partial(k)
        return TernaryForm(d, tower=self.tower) if d else None

    def substitute(self, lin: Sequence[Dict[Exp, Scalar]]):
        """Coefficient dict of F(l0, l1, l2) for linear dicts l_i."""
        pw = []
        for l in lin:
            row = [{(0, 0, 0): self.tower.one()}]
            for _ in range(self.degree):
                row.append(_pmul(row[-1], l, 3))
            pw.append(row)
        out = {}
        for (e0, e1, e2), c in self.coeffs.items():
            m = _pmul(_pmul(pw[0][e0], pw[1][e1], 3), pw[2][e2], 3)
            out = _padd(out, _pscale(m, c))
        return out

    def __str__(self):
        return format_poly(self.coeffs, VARS)

    def __repr__(self):
        return "TernaryForm(%s)" % self

    def to_json(self):
        return str(self)


def format_poly(coeffs, names) -> str:
    parts = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        mono = "*".join(n if k == 1 else "%s^%d" % (n, k)
                        for n, k in zip(names, e) if k)
        cs = str(c)
        compound = ("+" in cs[1:]) or ("-" in cs[1:])
        if not mono:
            term = cs
        elif cs == "1":
            term = mono
        elif cs == "-1":
            term = "-" + mono
        elif compound:
            term = "(%s)*%s" % (cs, mono)
        else:
            term = "%s*%s" % (cs, mono)
        parts.append(term)
    if not parts:
        return "0"
    s = parts[0]
    for p in parts[1:]:
        s += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return s


class BinaryForm:
    """c[k] is the coefficient of s^(d-k) t^k.  May be identically zero."""

    __slots__ = ("degree", "c", "tower")

    def __init__(self, coeffs: Sequence[Scalar], tower: FieldTower = BASE):
        self.degree = len(coeffs) - 1
        self.tower = tower
        self.c = tuple(as_scalar(x, tower) if not isinstance(x, Scalar) else x
                       for x in coeffs)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.c)

    def __call__(self, s, t):
        d = self.degree
        acc = self.tower.zero()
        for k, ck in enumerate(self.c):
            acc = acc + ck * (s ** (d - k)) * (t ** k)
        return acc

    def proportional(self, other: "BinaryForm") -> bool:
        if self.degree != other.degree:
            return False
        a, b = self.c, other.c
        # cross-ratio test
        for i in range(len(a)):
            for j in range(len(a)):
                if a[i] * b[j] != a[j] * b[i]:
                    return False
        return self.is_zero() == other.is_zero()

    def discriminant(self) -> Scalar:
        if self.degree != 3:
            raise FormError("discriminant implemented for binary cubics")
        a, b, c, d = self.c
        return (b * b * c * c - 4 * a * c ** 3 - 4 * b ** 3 * d - 27 * a * a * d * d
                + 18 * a * b * c * d)

    def __str__(self):
        d = self.degree
        co = {(d - k, k): v for k, v in enumerate(self.c) if not v.is_zero()}
        return format_poly(co, ("s", "t"))

    def __repr__(self):
        return "BinaryForm(%s)" % self


class ProjectivePoint:
    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        xs = [as_scalar(c) if not isinstance(c, Scalar) else c for c in coords]
        tw = _common_tower(xs)
        xs = [tw.embed(x) if x.tower != tw else x for x in xs]
        piv = next((x for x in xs if not x.is_zero()), None)
        if piv is None:
            raise FormError("the zero vector is not a projective point")
        inv = piv.inverse()
        self.coords = tuple(x * inv for x in xs)

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def sort_key(self):
        return tuple(x.c for x in self.coords)

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    __repr__ = __str__

    def to_json(self):
        return [str(c) for c in self.coords]


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


class ProjTransform:
    """Invertible 3x3 matrix over the tower, considered up to scalar."""

    __slots__ = ("m", "tower")

    def __init__(self, rows):
        m = [[as_scalar(x) if not isinstance(x, Scalar) else x for x in row]
             for row in rows]
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise FormError("need a 3x3 matrix")
        tw = _common_tower(x for r in m for x in r)
        self.m = tuple(tuple(tw.embed(x) if x.tower != tw else x for x in r) for r in m)
        self.tower = tw
        if _det3(self.m).is_zero():
            raise FormError("singular matrix")

    @classmethod
    def identity(cls):
        return cls.diag(1, 1, 1)

    @classmethod
    def diag(cls, a, b, c):
        z = 0
        return cls([[a, z, z], [z, b, z], [z, z, c]])

    @classmethod
    def perm(cls, images: Sequence[int]):
        """Matrix sending e_k to e_{images[k]}."""
        rows = [[0] * 3 for _ in range(3)]
        for k, im in enumerate(images):
            rows[im][k] = 1
        return cls(rows)

    def det(self) -> Scalar:
        return _det3(self.m)

    def __matmul__(self, other: "ProjTransform") -> "ProjTransform":
        a, b = self.m, other.m
        return ProjTransform([[a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]
                               for j in range(3)] for i in range(3)])

    def inverse(self) -> "ProjTransform":
        m = self.m
        d = _det3(m).inverse()
        cof = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                r = [x for x in range(3) if x != i]
                c = [y for y in range(3) if y != j]
                minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
                cof[i][j] = minor if (i + j) % 2 == 0 else -minor
        return ProjTransform([[cof[j][i] * d for j in range(3)] for i in range(3)])

    def apply(self, pt: Sequence) -> ProjectivePoint:
        x = list(pt)
        return ProjectivePoint([sum((self.m[i][j] * x[j] for j in range(3)),
                                    self.tower.zero()) for i in range(3)])

    def normalized(self) -> "ProjTransform":
        piv = next(x for r in self.m for x in r if not x.is_zero())
        if piv == 1:
            return self
        inv = piv.inverse()
        return ProjTransform([[x * inv for x in r] for r in self.m])

    def key(self):
        return tuple(x for r in self.normalized().m for x in r)

    def __eq__(self, other):
        return isinstance(other, ProjTransform) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_json(self):
        return [[str(x) for x in r] for r in self.m]

    def __repr__(self):
        return "ProjTransform(%s)" % (self.to_json(),)


def act(g: ProjTransform, f: TernaryForm) -> TernaryForm:
    """g.F(x) = F(g^{-1} x)."""
    gi = g.inverse().m
    lin = [{(1, 0, 0): gi[i][0], (0, 1, 0): gi[i][1], (0, 0, 1): gi[i][2]} for i in range(3)]
    lin = [{k: v for k, v in l.items() if not v.is_zero()} for l in lin]
    return TernaryForm(f.substitute(lin), degree=f.degree)


def line_parametrization(L: TernaryForm):
    """Two points P_s, P_t spanning V(L).

    The pivot is the last coordinate with a nonzero coefficient; the other
    two coordinates become (s, t) in increasing index order.
    """
    b = L.line_coeffs()
    k = max(i for i in range(3) if not b[i].is_zero())
    free = [i for i in range(3) if i != k]
    pts = []
    for i in free:
        p = [L.tower.zero()] * 3
        p[i] = L.tower.one()
        p[k] = -b[i] / b[k]
        pts.append(tuple(p))
    return pts[0], pts[1]


def restrict_to_line(F: TernaryForm, L: TernaryForm) -> BinaryForm:
    P, Q = line_parametrization(L)
    tw = F.tower if F.tower.degree >= L.tower.degree else L.tower
    # x = s P + t Q; substitute into F using a formal binary expansion
    lin = []
    for i in range(3):
        d = {}
        if not P[i].is_zero():
            d[(1, 0, 0)] = P[i]
        if not Q[i].is_zero():
            d[(0, 1, 0)] = Q[i]
        lin.append(d)
    out = F.substitute(lin)
    d = F.degree
    return BinaryForm([out.get((d - k, k, 0), tw.zero()) for k in range(d + 1)], tw)


class Pattern:
    """Multiplicity pattern of a binary cubic."""

    __slots__ = ("kind", "root", "simple_roots")

    def __init__(self, kind, root=None, simple_roots=()):
        self.kind = kind
        self.root = root
        self.simple_roots = tuple(simple_roots)

    def __eq__(self, other):
        if isinstance(other, Pattern):
            return self.kind == other.kind and self.root == other.root
        return self.kind == other

    def __repr__(self):
        return "Pattern(%r, root=%r)" % (self.kind, self.root)


def _bin_root_point(u):
    """(u : 1) for a finite root u of b(u, 1)."""
    return (u, u.tower.one())


def multiplicity_pattern(b: BinaryForm) -> Pattern:
    if b.degree != 3:
        raise FormError("multiplicity pattern is defined for binary cubics")
    if b.is_zero():
        return Pattern("zero")
    tw = b.tower
    m_inf = next(k for k in range(4) if not b.c[k].is_zero())
    # f(u) = b(u, 1), coefficients lowest first
    f = [b.c[3 - k] for k in range(4 - m_inf)]
    one, zero = tw.one(), tw.zero()
    inf_pt = (one, zero)
    if m_inf == 3:
        return Pattern((3,), inf_pt)
    if m_inf == 2:
        return Pattern((2, 1), inf_pt, [_bin_root_point(-f[0] / f[1])])
    g1 = ugcd(f, uderiv(f))
    dg = len(g1) - 1
    if m_inf == 1:
        if dg == 0:
            return Pattern((1, 1, 1), None, [inf_pt] + [_bin_root_point(u) for u in roots_in_field(f, tw)])
        u = -g1[0] / g1[1]
        return Pattern((2, 1), _bin_root_point(u), [inf_pt])
    if dg == 0:
        return Pattern((1, 1, 1), None, [_bin_root_point(u) for u in roots_in_field(f, tw)])
    if dg == 1:
        u = -g1[0] / g1[1]
        # the simple root: f / (u - root)^2
        lead = f[3]
        other = -(f[2] / lead) - 2 * u
        return Pattern((2, 1), _bin_root_point(u), [_bin_root_point(other)])
    # triple root is the root of f''
    u = -f[2] / (3 * f[3])
    return Pattern((3,), _bin_root_point(u))


def point_on_line(L: TernaryForm, st) -> ProjectivePoint:
    P, Q = line_parametrization(L)
    s, t = st
    return ProjectivePoint([s * P[i] + t * Q[i] for i in range(3)])


def divides(l: TernaryForm, F: TernaryForm) -> bool:
    """l | F, tested by restricting F to V(l)."""
    return restrict_to_line(F, l).is_zero()


def divide_by_linear(F: TernaryForm, l: TernaryForm) -> TernaryForm:
    """Exact quotient F / l (l must divide F)."""
    b = l.line_coeffs()
    k = max(i for i in range(3) if not b[i].is_zero())
    # long division treating F as a polynomial in x_k
    rem = dict(F.coeffs)
    quo = {}
    inv = b[k].inverse()
    while rem:
        # highest power of x_k in the remainder
        e = max(rem, key=lambda m: (m[k], m))
        if e[k] == 0:
            raise FormError("linear form does not divide F")
        c = rem[e] * inv
        qe = list(e)
        qe[k] -= 1
        qe = tuple(qe)
        quo[qe] = quo.get(qe, F.tower.zero()) + c
        sub = _pmul({qe: c}, l.coeffs, 3)
        rem = _padd(rem, _pscale(sub, -1))
    return TernaryForm(quo, tower=F.tower)


# -- pairs and families ---------------------------------------------------------


class CubicLinePair:
    __slots__ = ("C", "L")

    def __init__(self, C: TernaryForm, L: TernaryForm):
        if C.degree != 3 or L.degree != 1:
            raise FormError("a pair is a cubic form and a linear form")
        self.C = C
        self.L = L

    @classmethod
    def parse(cls, c: str, l: str, tower: FieldTower = BASE):
        return cls(TernaryForm.parse(c, tower, 3), TernaryForm.parse(l, tower, 1))

    @property
    def tower(self):
        return self.C.tower if self.C.tower.degree >= self.L.tower.degree else self.L.tower

    def act(self, g: ProjTransform) -> "CubicLinePair":
        return CubicLinePair(act(g, self.C), act(g, self.L))

    def equivalent(self, other: "CubicLinePair") -> bool:
        """Equality of both forms up to independent nonzero scalars."""
        return self.C.proportional(other.C) and self.L.proportional(other.L)

    def normalized(self) -> "CubicLinePair":
        return CubicLinePair(self.C.normalized(), self.L.normalized())

    def support(self):
        """Triples (i, j, k) with a_ij * b_k != 0."""
        out = []
        for (e0, e1, e2) in self.C.coeffs:
            for k in range(3):
                if not self.L.b(k).is_zero():
                    out.append((e1, e2, k))
        return sorted(out)

    def __eq__(self, other):
        return isinstance(other, CubicLinePair) and self.C == other.C and self.L == other.L

    def __hash__(self):
        return hash((self.C, self.L))

    def __repr__(self):
        return "CubicLinePair(%s ; %s)" % (self.C, self.L)

    def to_json(self):
        return {"C": str(self.C), "L": str(self.L)}


class LaurentForm:
    """Ternary form whose coefficients are Laurent polynomials in t.

    Stored as {exponent triple: {power of t: Scalar}}.
    """

    __slots__ = ("degree", "coeffs", "tower")

    def __init__(self, coeffs, degree, tower=BASE):
        out = {}
        for e, series in coeffs.items():
            s = {k: v for k, v in series.items() if not v.is_zero()}
            for k in s:
                if not T_MIN <= k <= T_MAX:
                    raise FormError("t-exponent %d outside [%d, %d]" % (k, T_MIN, T_MAX))
            if s:
                out[tuple(e)] = s
        self.coeffs = out
        self.degree = degree
        self.tower = tower

    @classmethod
    def constant(cls, f: TernaryForm):
        return cls({e: {0: c} for e, c in f.coeffs.items()}, f.degree, f.tower)

    @classmethod
    def parse(cls, text: str, degree: int, tower: FieldTower = BASE):
        d = parse_polynomial(text, tower, VARS + ("t",))
        out: Dict[Exp, Dict[int, Scalar]] = {}
        for (e0, e1, e2, k), c in d.items():
            if e0 + e1 + e2 != degree:
                raise FormError("family form is not homogeneous of degree %d" % degree)
            out.setdefault((e0, e1, e2), {})[k] = c
        return cls(out, degree, tower)

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_power(self) -> int:
        return min(k for s in self.coeffs.values() for k in s)

    def specialize(self, t0: Scalar) -> TernaryForm:
        t0 = as_scalar(t0, self.tower) if not isinstance(t0, Scalar) else t0
        out = {}
        for e, s in self.coeffs.items():
            acc = self.tower.zero()
            for k, v in s.items():
                acc = acc + v * (t0 ** k)
            out[e] = acc
        return TernaryForm(out, degree=self.degree)

    def limit(self) -> TernaryForm:
        if self.is_zero():
            raise ZeroFormAtLimit("form vanishes identically")
        kmin = self.min_power()
        out = {e: s[kmin] for e, s in self.coeffs.items() if kmin in s}
        if not out:
            raise ZeroFormAtLimit("form vanishes at t = 0 after clearing")
        return TernaryForm(out, degree=self.degree)

    def act_diagonal(self, diag):
        """Act by g(t) = Diag(c_i t^{e_i}); diag = [(c_i, e_i)]."""
        out = {}
        for e, s in self.coeffs.items():
            # x_i -> x_i / (c_i t^{e_i})
            scale = self.tower.one()
            shift = 0
            for i in range(3):
                c, p = diag[i]
                c = as_scalar(c, self.tower) if not isinstance(c, Scalar) else c
                scale = scale * (c.inverse() ** e[i])
                shift -= p * e[i]
            out[e] = {k + shift: v * scale for k, v in s.items()}
        return LaurentForm(out, self.degree, self.tower)

    def __str__(self):
        terms = {}
        for e, s in self.coeffs.items():
            for k, v in s.items():
                terms[e + (k,)] = v
        return format_poly(terms, VARS + ("t",))


class ParamFamily:
    """A pair (C_t, L_t) with Laurent-polynomial coefficients in t."""

    __slots__ = ("C", "L")

    def __init__(self, C: LaurentForm, L: LaurentForm):
        if C.degree != 3 or L.degree != 1:
            raise FormError("family must be (cubic, line)")
        self.C = C
        self.L = L

    @classmethod
    def parse(cls, c: str, l: str, tower: FieldTower = BASE):
        return cls(LaurentForm.parse(c, 3, tower), LaurentForm.parse(l, 1, tower))

    @classmethod
    def constant(cls, z: CubicLinePair):
        return cls(LaurentForm.constant(z.C), LaurentForm.constant(z.L))

    def act_diagonal(self, diag) -> "ParamFamily":
        return ParamFamily(self.C.act_diagonal(diag), self.L.act_diagonal(diag))

    def specialize(self, t0) -> CubicLinePair:
        return CubicLinePair(self.C.specialize(t0), self.L.specialize(t0))

    def limit_at_zero(self) -> CubicLinePair:
        return CubicLinePair(self.C.limit(), self.L.limit())

    def __repr__(self):
        return "ParamFamily(%s ; %s)" % (self.C, self.L)


def specialize(fam: ParamFamily, t0) -> CubicLinePair:
    return fam.specialize(t0)


def limit_at_zero(fam: ParamFamily) -> CubicLinePair:
    return fam.limit_at_zero()


# -- random helpers used by tests, demos and CLI sampling -------------------------


def random_scalar(rng: random.Random, bound: int = 5, cyclotomic: bool = False,
                  nonzero: bool = False) -> Scalar:
    while True:
        a = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
        b = Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) if cyclotomic else Fraction(0)
        s = Scalar(BASE, (a, b))
        if not (nonzero and s.is_zero()):
            return s


def random_transform(rng: random.Random, bound: int = 3, cyclotomic: bool = False) -> ProjTransform:
    while True:
        rows = [[random_scalar(rng, bound, cyclotomic) for _ in range(3)] for _ in range(3)]
        try:
            return ProjTransform(rows)
        except FormError:
            continue
