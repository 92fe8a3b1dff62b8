"""Singular points of plane cubics, their classification, and contact of a
line with a cubic."""
from __future__ import annotations

from itertools import combinations
from typing import Optional

from .forms import (BinaryForm, ProjectivePoint, TernaryForm, divide_by_linear,
                    divides, monomials, multiplicity_pattern, point_on_line,
                    restrict_to_line)
from .scalars import (BASE, FieldTower, Reducible, Scalar,
                      adjoin_quadratic, roots_in_field, udivmod, ugcd,
                      usquarefree, _ustrip)


class GeometryError(Exception):
    pass


class IrrationalSingularity(GeometryError):
    """A singular point needs a larger field than the tower allows."""

    def __init__(self, msg, minpoly=None):
        super().__init__(msg)
        self.minpoly = minpoly


# -- small exact linear algebra --------------------------------------------------


def row_reduce(rows):
    """Reduced row echelon form; returns (rref rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncol = len(m[0])
    piv = []
    r = 0
    for c in range(ncol):
        k = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], piv


def rank(rows) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows, ncol: int, tower: FieldTower):
    red, piv = row_reduce(rows) if rows else ([], [])
    free = [c for c in range(ncol) if c not in piv]
    basis = []
    for f in free:
        v = [tower.zero()] * ncol
        v[f] = tower.one()
        for r, pc in zip(red, piv):
            v[pc] = -r[f]
        basis.append(v)
    return basis


def cross(p, q):
    return [p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]]


def line_through(p, q) -> TernaryForm:
    c = cross(list(p), list(q))
    L = TernaryForm.linear(*c).normalized()
    return _lower_form(L)


def _lower_form(f: TernaryForm) -> TernaryForm:
    if f.tower.quad is not None and all(c.in_base() for c in f.coeffs.values()):
        return TernaryForm({e: c.lower() for e, c in f.coeffs.items()}, tower=BASE)
    return f


# -- data types -----------------------------------------------------------------


class SingularPoint:
    """A singular point with its tangent cone data.

    cone is 'node' (two distinct lines), 'double_line', or 'triple'.
    """

    __slots__ = ("point", "multiplicity", "cone", "tangent_lines", "tangent_divides",
                 "split")

    def __init__(self, point, multiplicity, cone, tangent_lines=(), tangent_divides=(),
                 split=True):
        self.point = point
        self.multiplicity = multiplicity
        self.cone = cone
        self.tangent_lines = list(tangent_lines)
        self.tangent_divides = list(tangent_divides)
        self.split = split

    @property
    def tangent_line(self):
        return self.tangent_lines[0] if self.cone == "double_line" else None

    def __repr__(self):
        return "SingularPoint(%s, m=%d, %s)" % (self.point, self.multiplicity, self.cone)

    def to_json(self):
        return {"point": self.point.to_json(), "multiplicity": self.multiplicity,
                "cone": self.cone,
                "tangent_lines": [str(l) for l in self.tangent_lines],
                "tangent_divides": list(self.tangent_divides)}


class PositiveDimensionalSingularLocus:
    """Singular locus containing the line(s) V(l) for l in ``lines``."""

    def __init__(self, lines, vertex=None):
        self.lines = list(lines)
        self.vertex = vertex

    def contains(self, pt) -> bool:
        return any(l.evaluate(pt).is_zero() for l in self.lines)

    def __repr__(self):
        return "PositiveDimensionalSingularLocus(%s)" % [str(l) for l in self.lines]


KINDS = ("Smooth", "IrreducibleNodal", "IrreducibleCuspidal", "ConicPlusChord",
         "ConicPlusTangentLine", "Triangle", "ThreeConcurrentLines",
         "LinePlusDoubleLine", "TripleLine")
IRREDUCIBLE = ("Smooth", "IrreducibleNodal", "IrreducibleCuspidal")


class CurveClass:
    def __init__(self, kind, components=(), singular=None, extension_used=False):
        assert kind in KINDS
        self.kind = kind
        self.components = list(components)
        self.singular = singular
        self.extension_used = extension_used

    @property
    def irreducible(self) -> bool:
        return self.kind in IRREDUCIBLE

    @property
    def reduced(self) -> bool:
        return self.kind not in ("LinePlusDoubleLine", "TripleLine")

    def singular_points(self):
        if isinstance(self.singular, PositiveDimensionalSingularLocus):
            return []
        return [s.point for s in self.singular]

    def __eq__(self, other):
        if isinstance(other, str):
            return self.kind == other
        return isinstance(other, CurveClass) and self.kind == other.kind

    def __repr__(self):
        return "CurveClass(%s)" % self.kind

    def to_json(self):
        return {"kind": self.kind, "components": [str(c) for c in self.components],
                "extension_used": self.extension_used}


# -- singular points ----------------------------------------------------------------

# net members tried for elimination; a fixed list keeps results deterministic
_COMBOS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (3, -1, 2),
           (2, 5, -3), (1, -4, 7), (5, 3, 1), (-2, 7, 4))
_CENTERS = ((0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 2, 3), (2, -1, 5),
            (3, 5, -2), (1, -3, 4))


def _partials(F: TernaryForm):
    return [F.partial(k) for k in range(3)]


def _eval_dict(d, pt, tower):
    acc = tower.zero()
    for (e0, e1, e2), c in d.items():
        acc = acc + c * (pt[0] ** e0) * (pt[1] ** e1) * (pt[2] ** e2)
    return acc


def _is_singular(F: TernaryForm, pt) -> bool:
    tw = _top(F.tower, pt)
    return all(_eval_dict(d, pt, tw).is_zero() for d in _partials(F))


def _top(tw, pt):
    for x in pt:
        if x.tower.degree > tw.degree:
            tw = x.tower
    return tw


def _hessian(F: TernaryForm, pt):
    tw = _top(F.tower, pt)
    H = [[None] * 3 for _ in range(3)]
    first = _partials(F)
    for i in range(3):
        for j in range(3):
            d = {}
            for e, c in first[i].items():
                if e[j]:
                    f = list(e)
                    f[j] -= 1
                    d[tuple(f)] = c * e[j]
            H[i][j] = _eval_dict(d, pt, tw)
    return H


def _quad_in_y2(d):
    """Split a quadric dict into (alpha, beta, gamma) in x2 with beta, gamma
    binary coefficient lists in (x0, x1) indexed by power of x0."""
    alpha = None
    beta = {}
    gamma = {}
    for (e0, e1, e2), c in d.items():
        if e2 == 2:
            alpha = c
        elif e2 == 1:
            beta[e0] = c
        else:
            gamma[e0] = c
    return alpha, beta, gamma


def _bmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y if (i + j) in out else x * y
    return out


def _bsub(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] - v if k in out else -v
    return out


def _bscale(a, c):
    return {k: v * c for k, v in a.items()}


def _resultant_y2(q1, q2, tower):
    """Homogeneous resultant in x2 of two quadrics, as a binary quartic
    {power of x0: coefficient} with total degree 4 in (x0, x1)."""
    a1, b1, c1 = _quad_in_y2(q1)
    a2, b2, c2 = _quad_in_y2(q2)
    z = tower.zero()
    a1 = a1 if a1 is not None else z
    a2 = a2 if a2 is not None else z
    ac = _bsub(_bscale(c2, a1), _bscale(c1, a2))
    ab = _bsub(_bscale(b2, a1), _bscale(b1, a2))
    bc = _bsub(_bmul(b1, c2), _bmul(b2, c1))
    res = _bsub(_bmul(ac, ac), _bmul(ab, bc))
    return [res.get(k, z) for k in range(5)]


def _combo(parts, c):
    out = {}
    for coef, d in zip(c, parts):
        if coef == 0:
            continue
        for e, v in d.items():
            out[e] = out[e] + v * coef if e in out else v * coef
    return {e: v for e, v in out.items() if not v.is_zero()}


def _binary_gcd(polys, tower):
    """gcd of binary forms given as coefficient lists (index = power of x0,
    fixed formal degree).  Returns (univariate gcd in u = x0/x1, root-at-(1:0)
    flag)."""
    g = None
    inf = True
    for p in polys:
        d = len(p) - 1
        inf = inf and p[d].is_zero()
        pu = _ustrip(p)
        g = pu if g is None else ugcd(g, pu)
    return (g or []), inf


def _completion(O):
    """Matrix with columns e_a, e_b, O (invertible), a < b fixed order."""
    i0 = next(i for i in range(3) if not O[i].is_zero())
    others = [i for i in range(3) if i != i0]
    tw = O[0].tower
    cols = []
    for i in others:
        e = [tw.zero()] * 3
        e[i] = tw.one()
        cols.append(e)
    cols.append(list(O))
    return [[cols[c][r] for c in range(3)] for r in range(3)]


def _compose(F: TernaryForm, A):
    lin = []
    for i in range(3):
        d = {}
        for j, e in enumerate(((1, 0, 0), (0, 1, 0), (0, 0, 1))):
            if not A[i][j].is_zero():
                d[e] = A[i][j]
        lin.append(d)
    return TernaryForm(F.substitute(lin), degree=F.degree)


def _apply(A, y):
    return [sum((A[i][j] * y[j] for j in range(3)), A[i][0] * 0) for i in range(3)]


def _points_over_root(parts, a, b, tower):
    """Common zeros (a : b : y2) of the quadric dicts in ``parts``."""
    us = []
    for d in parts:
        al, be, ga = _quad_in_y2(d)
        z = tower.zero()

        # binary coefficient dicts are indexed by power of x0; x1 carries the rest
        def evh(bd, deg):
            acc = z
            for k, v in bd.items():
                acc = acc + v * (a ** k) * (b ** (deg - k))
            return acc
        us.append(_ustrip([evh(ga, 2), evh(be, 1), al if al is not None else z]))
    nz = [u for u in us if u]
    if not nz:
        return None  # whole line: cannot happen for a finite locus
    g = nz[0]
    for u in nz[1:]:
        g = ugcd(g, u)
    return g


def singular_points(F: TernaryForm, allow_extension: bool = True):
    """List of SingularPoint, or PositiveDimensionalSingularLocus."""
    if F.degree != 3:
        raise GeometryError("singular_points expects a cubic")
    tw = F.tower
    parts = _partials(F)
    mons = monomials(2)
    mat = [[d.get(m, tw.zero()) for m in mons] for d in parts]
    rk = rank(mat)
    if rk == 1:
        # F is the cube of a line; V(line) is the kernel of the partials
        ker = nullspace([list(col) for col in zip(*mat)], 3, tw)
        l = line_through(ker[0], ker[1])
        return _confirm_line_locus(F, [l])
    if rk == 2:
        ker = nullspace([list(col) for col in zip(*mat)], 3, tw)
        c = ProjectivePoint(ker[0])
        b, ea, eb = _cone_binary(F, c)
        pat = multiplicity_pattern(b)
        if pat.kind == (2, 1):
            s, t = pat.root
            q = [s * ea[i] + t * eb[i] for i in range(3)]
            l = line_through(c, q)
            return _confirm_line_locus(F, [l], vertex=c)
        if pat.kind != (1, 1, 1):
            raise GeometryError("inconsistent cone structure")
        lines = []
        for (s, t) in pat.simple_roots:
            q = [s * ea[i] + t * eb[i] for i in range(3)]
            lines.append(line_through(c, q))
        return [SingularPoint(c, 3, "triple", lines, [True] * len(lines),
                              split=len(lines) == 3)]
    pts = _finite_singular(F, allow_extension)
    return [_describe(F, p) for p in pts]


def _confirm_line_locus(F, lines, vertex=None):
    for l in lines:
        for d in _partials(F):
            if d and not restrict_to_line(TernaryForm(d, tower=F.tower), l).is_zero():
                raise GeometryError("singular line witness failed")
    return PositiveDimensionalSingularLocus(lines, vertex)


def _cone_binary(F, c):
    i0 = next(i for i in range(3) if not c[i].is_zero())
    tw = F.tower
    free = [i for i in range(3) if i != i0]
    basis = []
    for i in free:
        e = [tw.zero()] * 3
        e[i] = tw.one()
        basis.append(e)
    ea, eb = basis
    lin = []
    for i in range(3):
        d = {}
        if not ea[i].is_zero():
            d[(1, 0, 0)] = ea[i]
        if not eb[i].is_zero():
            d[(0, 1, 0)] = eb[i]
        lin.append(d)
    out = F.substitute(lin)
    b = BinaryForm([out.get((3 - k, k, 0), tw.zero()) for k in range(4)], tw)
    return b, ea, eb


def _finite_singular(F: TernaryForm, allow_extension: bool):
    tw = F.tower
    found = []
    for Oc in _CENTERS:
        O = [Scalar.rational(x, tw) for x in Oc]
        if _is_singular(F, O):
            p = ProjectivePoint(O)
            if p not in found:
                found.append(p)
            continue
        A = _completion(O)
        G = _compose(F, A)
        parts = _partials(G)
        nets = [_combo(parts, c) for c in _COMBOS]
        nets = [n for n in nets if n]
        res = []
        for q1, q2 in combinations(nets, 2):
            r = _resultant_y2(q1, q2, tw)
            if any(not x.is_zero() for x in r):
                res.append(r)
            if len(res) >= 6:
                break
        if not res:
            continue
        g, inf = _binary_gcd(res, tw)
        pts = _solve_projection(G, parts, g, inf, tw, allow_extension)
        for y in pts:
            p = ProjectivePoint(_apply(A_lift(A, y), y))
            if p not in found:
                found.append(p)
        break
    else:
        raise GeometryError("no admissible elimination center")
    for p in found:
        if not _is_singular(F, list(p)):
            raise GeometryError("candidate singular point failed validation")
    found.sort(key=lambda p: p.sort_key())
    return found


def A_lift(A, y):
    tw = y[0].tower
    if A[0][0].tower != tw:
        return [[tw.embed(x) for x in row] for row in A]
    return A


def _solve_projection(G, parts, g, inf, tw, allow_extension):
    """Points (a : b : y2) of Sing(G) over the roots of the eliminant."""
    pts = []
    zero, one = tw.zero(), tw.one()
    fibers = []
    if inf:
        fibers.append((one, zero))
    g = usquarefree(g) if len(g) > 1 else g
    roots = roots_in_field(g, tw) if len(g) > 1 else []
    for u in roots:
        fibers.append((u, one))
    leftover = g
    for u in roots:
        leftover, _ = udivmod(leftover, [-u, one])
    for a, b in fibers:
        pts.extend(_fiber_points(G, parts, a, b, tw, allow_extension))
    if len(leftover) > 1:
        pts.extend(_irrational_fibers(G, parts, leftover, tw, allow_extension))
    return pts


def _fiber_points(G, parts, a, b, tw, allow_extension):
    h = _points_over_root(parts, a, b, tw)
    if h is None or len(h) <= 1:
        return []
    out = []
    for y2 in roots_in_field(h, tw):
        y = [a, b, y2]
        if _is_singular(G, y):
            out.append(y)
    if len(h) == 3 and not out:
        # an irreducible quadratic over this fiber
        sub = _extend_and_solve(h, tw, allow_extension)
        if sub is not None:
            tw2, rts = sub
            for y2 in rts:
                y = [tw2.embed(a), tw2.embed(b), y2]
                if _is_singular(G, y):
                    out.append(y)
    return out


def _extend_and_solve(h, tw, allow_extension):
    """Adjoin a root of the monic quadratic h (lowest first)."""
    inv = h[-1].inverse()
    h = [c * inv for c in h]
    if tw.quad is not None or not allow_extension:
        raise IrrationalSingularity("singular point needs a root of a quadratic beyond the tower",
                                    minpoly=h)
    try:
        tw2 = adjoin_quadratic(tw, h)
    except Reducible as e:
        return tw, list(e.roots)
    rts = roots_in_field([tw2.embed(c) for c in h], tw2)
    return tw2, rts


def _irrational_fibers(G, parts, f, tw, allow_extension):
    inv = f[-1].inverse()
    f = [c * inv for c in f]
    if len(f) != 3:
        # a cubic or quartic factor: either spurious or genuinely irrational
        return _refine_or_fail(G, parts, f, tw)
    if tw.quad is not None or not allow_extension:
        return _refine_or_fail(G, parts, f, tw)
    tw2 = adjoin_quadratic(tw, f)
    G2 = TernaryForm({e: tw2.embed(c) for e, c in G.coeffs.items()}, tower=tw2)
    parts2 = _partials(G2)
    out = []
    one = tw2.one()
    for u in roots_in_field([tw2.embed(c) for c in f], tw2):
        h = _points_over_root(parts2, u, one, tw2)
        if h is None or len(h) <= 1:
            continue
        for y2 in roots_in_field(h, tw2):
            y = [u, one, y2]
            if _is_singular(G2, y):
                out.append(y)
    return out


def _refine_or_fail(G, parts, f, tw):
    """Try to split off spurious factors by more eliminants; else fail."""
    nets = [_combo(parts, c) for c in _COMBOS]
    nets = [n for n in nets if n]
    g = f
    for q1, q2 in combinations(nets, 2):
        r = _ustrip(_resultant_y2(q1, q2, tw))
        if r:
            g = ugcd(g, r)
        if len(g) <= 1:
            return []
    if len(g) <= 1:
        return []
    raise IrrationalSingularity("singular points are conjugate over an extension of degree %d"
                                % (len(g) - 1), minpoly=g)


def _describe(F: TernaryForm, p: ProjectivePoint) -> SingularPoint:
    pt = list(p)
    H = _hessian(F, pt)
    rk = rank(H)
    if rk == 0:
        return SingularPoint(p, 3, "triple")
    tw = _top(F.tower, pt)
    i0 = next(i for i in range(3) if not pt[i].is_zero())
    free = [i for i in range(3) if i != i0]

    def e(i):
        v = [tw.zero()] * 3
        v[i] = tw.one()
        return v
    ea, eb = e(free[0]), e(free[1])

    # binary quadratic q(s ea + t eb) = A s^2 + B s t + C t^2
    A = H[free[0]][free[0]]
    C = H[free[1]][free[1]]
    B = H[free[0]][free[1]] * 2
    dirs = []
    if A.is_zero():
        dirs.append((tw.one(), tw.zero()))
        if not B.is_zero():
            dirs.append((-C / B, tw.one()))
        elif C.is_zero():
            pass
    else:
        for u in roots_in_field([C, B, A], tw):
            dirs.append((u, tw.one()))
    lines = []
    for s, t in dirs:
        qv = [s * ea[i] + t * eb[i] for i in range(3)]
        lines.append(line_through(pt, qv))
    uniq = []
    for l in lines:
        if not any(l == m for m in uniq):
            uniq.append(l)
    Fl = F if F.tower == tw else TernaryForm({k: tw.embed(v) for k, v in F.coeffs.items()}, tower=tw)
    divs = [divides(_embed_form(l, tw), Fl) for l in uniq]
    if rk == 1:
        return SingularPoint(p, 2, "double_line", uniq, divs)
    return SingularPoint(p, 2, "node", uniq, divs, split=len(uniq) == 2)


def _embed_form(f, tw):
    if f.tower == tw:
        return f
    return TernaryForm({k: tw.embed(v) for k, v in f.coeffs.items()}, tower=tw)


def _residual_conic_rank(Q: TernaryForm) -> int:
    c = Q.coeff
    M = [[c((2, 0, 0)) * 2, c((1, 1, 0)), c((1, 0, 1))],
         [c((1, 1, 0)), c((0, 2, 0)) * 2, c((0, 1, 1))],
         [c((1, 0, 1)), c((0, 1, 1)), c((0, 0, 2)) * 2]]
    return rank(M)


def classify_cubic(F: TernaryForm) -> CurveClass:
    sing = singular_points(F)
    if isinstance(sing, PositiveDimensionalSingularLocus):
        l = sing.lines[0]
        if sing.vertex is None:
            return CurveClass("TripleLine", [l, l, l], sing)
        Fl = _embed_form(F, l.tower)
        rest = divide_by_linear(divide_by_linear(Fl, l), l)
        return CurveClass("LinePlusDoubleLine", [l, l, _lower_form(rest.normalized())], sing)
    ext = any(sp.point[0].tower.quad is not None and F.tower.quad is None for sp in sing)
    if not sing:
        return CurveClass("Smooth", [], sing)
    if any(sp.multiplicity == 3 for sp in sing):
        sp = sing[0]
        return CurveClass("ThreeConcurrentLines", sp.tangent_lines, sing)
    if len(sing) == 3:
        a, b, c = [sp.point for sp in sing]
        return CurveClass("Triangle", [line_through(a, b), line_through(a, c),
                                       line_through(b, c)], sing, ext)
    if len(sing) == 2:
        l = line_through(sing[0].point, sing[1].point)
        Q = divide_by_linear(F, _embed_form(l, F.tower))
        if _residual_conic_rank(Q) != 3:
            raise GeometryError("residual conic is degenerate")
        return CurveClass("ConicPlusChord", [l, Q.normalized()], sing, ext)
    sp = sing[0]
    if sp.cone == "double_line":
        l = sp.tangent_lines[0]
        if sp.tangent_divides[0]:
            Q = divide_by_linear(F, l)
            return CurveClass("ConicPlusTangentLine", [l, Q.normalized()], sing)
        return CurveClass("IrreducibleCuspidal", [], sing)
    if not any(sp.tangent_divides):
        return CurveClass("IrreducibleNodal", [], sing)
    # a node whose tangent line is a component forces a second node on it
    l = sp.tangent_lines[sp.tangent_divides.index(True)]
    Q = divide_by_linear(F, l)
    return CurveClass("ConicPlusChord", [l, Q.normalized()], sing)


# -- contact of a line with a cubic --------------------------------------------------

CONTACT_KINDS = ("Transversal", "SimpleTangent", "ThreeTangent", "Contained")


class ContactType:
    def __init__(self, kind, points, tangency_point=None, smooth_at_tangency=None,
                 curve_irreducible=False, curve_class=None):
        self.kind = kind
        self.points = points             # list of (ProjectivePoint or None, multiplicity)
        self.tangency_point = tangency_point
        self.smooth_at_tangency = smooth_at_tangency
        self.curve_irreducible = curve_irreducible
        self.curve_class = curve_class

    @property
    def two_tangent(self) -> bool:
        return (self.kind == "SimpleTangent" and bool(self.smooth_at_tangency)
                and self.curve_irreducible)

    def __eq__(self, other):
        if isinstance(other, str):
            return self.kind == other
        return NotImplemented

    def __repr__(self):
        return "ContactType(%s, %s)" % (self.kind, self.points)

    def to_json(self):
        return {"kind": self.kind,
                "points": [[p.to_json() if p is not None else None, m] for p, m in self.points],
                "smooth_at_tangency": self.smooth_at_tangency,
                "curve_irreducible": self.curve_irreducible}


def contact_type(F: TernaryForm, L: TernaryForm, curve_class: Optional[CurveClass] = None) -> ContactType:
    b = restrict_to_line(F, L)
    pat = multiplicity_pattern(b)
    cc = curve_class if curve_class is not None else classify_cubic(F)
    irr = cc.irreducible
    if pat.kind == "zero":
        return ContactType("Contained", [], curve_irreducible=irr, curve_class=cc)
    pts = []
    if pat.root is not None:
        m = pat.kind[0]
        pts.append((point_on_line(L, pat.root), m))
    for r in pat.simple_roots:
        pts.append((point_on_line(L, r), 1))
    known = sum(m for _, m in pts)
    pts.extend([(None, 1)] * (3 - known))
    if pat.kind == (1, 1, 1):
        return ContactType("Transversal", pts, curve_irreducible=irr, curve_class=cc)
    tp = pts[0][0]
    smooth = not _is_singular(F, list(tp))
    # cross-check against the singular locus
    sing = cc.singular
    if isinstance(sing, PositiveDimensionalSingularLocus):
        on = sing.contains(list(tp))
    else:
        on = any(sp.point == tp or _same_point(sp.point, tp) for sp in sing)
    if on == smooth:
        raise GeometryError("smoothness check disagrees with the singular locus")
    kind = "SimpleTangent" if pat.kind == (2, 1) else "ThreeTangent"
    return ContactType(kind, pts, tp, smooth, irr, cc)


def _same_point(p, q):
    return all((p[i] * q[j] - p[j] * q[i]).is_zero() for i in range(3) for j in range(3))


def line_through_singular(L: TernaryForm, cc: CurveClass) -> bool:
    sing = cc.singular
    if isinstance(sing, PositiveDimensionalSingularLocus):
        return True
    for sp in sing:
        Lx = _embed_form(L, sp.point[0].tower) if sp.point[0].tower.degree > L.tower.degree else L
        if Lx.evaluate(list(sp.point)).is_zero():
            return True
    return False
