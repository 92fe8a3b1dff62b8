"""Stability of (cubic, line) pairs under PGL(3).

The verdict is decided from the geometry of the pair (singular points, how
the line meets the curve).  The numerical side (weights R_ijk, mu, the worst
one-parameter subgroup of a fixed frame) is used to produce certificates: an
explicit transform g and weight vector lam with mu(g.z, lam) < 0 for unstable
pairs and = 0 for strictly semistable ones.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Tuple

from .forms import (CubicLinePair, FormError, ParamFamily, ProjTransform, ProjectivePoint,
                    TernaryForm, act, line_parametrization, restrict_to_line)
from .geometry import (CurveClass, GeometryError, classify_cubic,
                       contact_type, cross, line_through_singular, _same_point)
from .hesse import close_group, g216, is_hesse_member
from .scalars import ZETA, Scalar, as_scalar, roots_in_field


class StabilityError(Exception):
    pass


class NormalFormFailure(StabilityError):
    """A constructed transform did not produce the expected shape."""


class StratumMismatch(StabilityError):
    """The pair is not in the stratum the operation was asked about."""


# -- one-parameter subgroups and weights ---------------------------------------


class OnePS:
    """Normalized weight triple r0 >= r1 >= r2, r0 + r1 + r2 = 0, gcd 1."""

    __slots__ = ("r",)

    def __init__(self, r0, r1=None, r2=None):
        if r1 is None:
            r0, r1, r2 = r0
        r = (int(r0), int(r1), int(r2))
        if sum(r) != 0 or not r[0] >= r[1] >= r[2] or r == (0, 0, 0):
            raise ValueError("not a normalized one-parameter subgroup: %r" % (r,))
        g = math.gcd(math.gcd(abs(r[0]), abs(r[1])), abs(r[2]))
        if g != 1:
            raise ValueError("weight triple %r is not gcd-reduced" % (r,))
        self.r = r

    @classmethod
    def reduced(cls, r):
        g = math.gcd(math.gcd(abs(r[0]), abs(r[1])), abs(r[2]))
        return cls(*(x // g for x in r))

    def __iter__(self):
        return iter(self.r)

    def __getitem__(self, k):
        return self.r[k]

    def __eq__(self, other):
        if isinstance(other, OnePS):
            return self.r == other.r
        return self.r == tuple(other)

    def __hash__(self):
        return hash(self.r)

    def __repr__(self):
        return "OnePS%r" % (self.r,)

    def to_json(self):
        return list(self.r)


def weight(i: int, j: int, k: int, lam) -> int:
    """R_ijk = (3-i-j) r0 + i r1 + j r2 + r_k."""
    if not (0 <= i and 0 <= j and i + j <= 3 and k in (0, 1, 2)):
        raise ValueError("bad weight index (%d, %d, %d)" % (i, j, k))
    r = tuple(lam)
    return (3 - i - j) * r[0] + i * r[1] + j * r[2] + r[k]


def mu(z: CubicLinePair, lam) -> int:
    return max(weight(i, j, k, lam) for i, j, k in z.support())


# groups of equal weights, laid out row by row; within a row the weights
# decrease to the right, and each entry dominates the one directly below it
WEIGHT_LATTICE = (
    (((0, 0, 0),),),
    (((0, 0, 1), (1, 0, 0)), ((0, 0, 2), (0, 1, 0))),
    (((1, 0, 1), (2, 0, 0)), ((1, 0, 2), (1, 1, 0), (0, 1, 1)), ((0, 1, 2), (0, 2, 0))),
    (((2, 0, 1), (3, 0, 0)), ((2, 0, 2), (1, 1, 1), (2, 1, 0)),
     ((1, 1, 2), (0, 2, 1), (1, 2, 0)), ((0, 2, 2), (0, 3, 0))),
    (((3, 0, 1),), ((3, 0, 2), (2, 1, 1)), ((2, 1, 2), (1, 2, 1)),
     ((1, 2, 2), (0, 3, 1)), ((0, 3, 2),)),
)


def weight_order_relations():
    """All (kind, lhs, rhs) relations of the lattice; kind is '=' or '>='."""
    rel = []
    for row in WEIGHT_LATTICE:
        for grp in row:
            for other in grp[1:]:
                rel.append(("=", grp[0], other))
        for a, b in zip(row, row[1:]):
            rel.append((">=", a[0], b[0]))
    for upper, lower in zip(WEIGHT_LATTICE, WEIGHT_LATTICE[1:]):
        for a, b in zip(upper, lower):
            rel.append((">=", a[0], b[0]))
    return rel


def check_weight_order(lam) -> bool:
    for kind, a, b in weight_order_relations():
        wa, wb = weight(*a, lam), weight(*b, lam)
        if kind == "=" and wa != wb:
            return False
        if kind == ">=" and wa < wb:
            return False
    return True


class WorstOnePS:
    __slots__ = ("lam", "mu", "value")

    def __init__(self, lam, mu_value, value):
        self.lam = lam
        self.mu = mu_value
        self.value = value

    def __iter__(self):
        return iter((self.lam, self.value))

    def __repr__(self):
        return "WorstOnePS(%r, mu=%d, value=%s)" % (self.lam, self.mu, self.value)

    def to_json(self):
        return {"lambda": self.lam.to_json(), "mu": self.mu, "value": str(self.value)}


def worst_one_ps(z: CubicLinePair) -> WorstOnePS:
    """Minimize mu over normalized weights, in the given frame.

    On the cross-section r0 - r2 = 1 the weights are r = (s, 1 - 2s, s - 1)
    with s in [1/3, 2/3], and each R_ijk is affine in s.  The minimum of the
    upper envelope is attained at an endpoint or at a crossing of two lines,
    so it is enough to evaluate those candidates.  Ties go to the smaller s.
    """
    lines = set()
    for i, j, k in z.support():
        # R at s: constant part from r = (0, 1, -1), slope from (1, -2, 1)
        c = weight(i, j, k, (0, 1, -1))
        m = weight(i, j, k, (1, -2, 1))
        lines.add((m, c))
    lines = sorted(lines)
    lo, hi = Fraction(1, 3), Fraction(2, 3)
    cands = {lo, hi}
    for a in range(len(lines)):
        for b in range(a + 1, len(lines)):
            (m1, c1), (m2, c2) = lines[a], lines[b]
            if m1 != m2:
                s = Fraction(c2 - c1, m1 - m2)
                if lo <= s <= hi:
                    cands.add(s)
    best = None
    for s in sorted(cands):
        v = max(m * s + c for m, c in lines)
        if best is None or v < best[1]:
            best = (s, v)
    s, v = best
    r = (s, 1 - 2 * s, s - 1)
    den = 1
    for x in r:
        den = den * x.denominator // math.gcd(den, x.denominator)
    lam = OnePS.reduced(tuple(int(x * den) for x in r))
    return WorstOnePS(lam, mu(z, lam), v)


# -- frames --------------------------------------------------------------------


def _pivot(L: TernaryForm) -> int:
    b = L.line_coeffs()
    return max(i for i in range(3) if not b[i].is_zero())


def _basis(k, tower):
    v = [tower.zero()] * 3
    v[k] = tower.one()
    return ProjectivePoint(v)


def _other_point(L: TernaryForm, p) -> ProjectivePoint:
    """A point of V(L) distinct from p, chosen from the fixed spanning pair."""
    for q in line_parametrization(L):
        q = ProjectivePoint(q)
        if p is None or not _same_point(q, p):
            return q
    raise NormalFormFailure("no second point on the line")


def _line_points(L: TernaryForm):
    return sorted((ProjectivePoint(q) for q in line_parametrization(L)),
                  key=lambda p: p.sort_key())


def frame(p0, p1, p2) -> ProjTransform:
    """The transform sending p0, p1, p2 to the coordinate points e0, e1, e2."""
    cols = [list(p0), list(p1), list(p2)]
    try:
        M = ProjTransform([[cols[c][r] for c in range(3)] for r in range(3)])
    except FormError:
        raise NormalFormFailure("frame points are collinear")
    return M.inverse()


def _meet(l1: TernaryForm, l2: TernaryForm) -> ProjectivePoint:
    return ProjectivePoint(cross(list(l1.line_coeffs()), list(l2.line_coeffs())))


def _conic_line_points(Q: TernaryForm, L: TernaryForm):
    """Points of V(Q) on V(L), sorted, with multiplicity (rational only)."""
    b = restrict_to_line(Q, L)
    c0, c1, c2 = b.c
    P, R = line_parametrization(L)

    def pt(s, t):
        return ProjectivePoint([s * P[i] + t * R[i] for i in range(3)])
    one, zero = b.tower.one(), b.tower.zero()
    if b.is_zero():
        raise NormalFormFailure("line is contained in the conic")
    out = []
    if c0.is_zero():
        out.append((pt(one, zero), 2 if c1.is_zero() else 1))
        if not c1.is_zero():
            out.append((pt(-c2, c1), 1))
        return out
    disc = c1 * c1 - 4 * c0 * c2
    if disc.is_zero():
        return [(pt(-c1 / (2 * c0), one), 2)]
    roots = roots_in_field([c2, c1, c0], b.tower)
    if len(roots) != 2:
        raise NormalFormFailure("conic meets the line in irrational points")
    return sorted(((pt(u, one), 1) for u in roots), key=lambda x: x[0].sort_key())


def _tangency(Q: TernaryForm, L: TernaryForm) -> Optional[ProjectivePoint]:
    pts = _conic_line_points(Q, L)
    return pts[0][0] if pts[0][1] == 2 else None


# -- verdicts ------------------------------------------------------------------

REASONS = {
    "i": "L is a triple tangent to C",
    "ii": "L is contained in C",
    "iii": "L passes through a double point of C",
    "iv": "C has a triple point",
    "v": "C is nonreduced",
}
# a nonreduced cubic always has a triple point, so (v) is tested before (iv)
REASON_ORDER = ("v", "iv", "ii", "i", "iii")
WITNESS_WEIGHTS = {"i": (3, 1, -4), "ii": (3, 1, -4), "iii": (2, -1, -1),
                   "iv": (2, -1, -1), "v": (1, 1, -2)}

ROWS = {
    1: ("Smooth", "Transversal"), 2: ("Smooth", "SimpleTangent"),
    3: ("Triangle", "Transversal"),
    4: ("ConicPlusChord", "Transversal"), 5: ("ConicPlusChord", "SimpleTangent"),
    6: ("ConicPlusTangentLine", "Transversal"), 7: ("ConicPlusTangentLine", "SimpleTangent"),
    8: ("IrreducibleNodal", "Transversal"), 9: ("IrreducibleNodal", "SimpleTangent"),
    10: ("IrreducibleCuspidal", "Transversal"), 11: ("IrreducibleCuspidal", "SimpleTangent"),
}
STABLE_ROWS = (1, 3, 4, 8, 10)
_ROW_OF = {v: k for k, v in ROWS.items()}


class Certificate:
    __slots__ = ("g", "lam", "mu")

    def __init__(self, g: ProjTransform, lam: OnePS, mu_value: int):
        self.g = g
        self.lam = lam
        self.mu = mu_value

    def verify(self, z: CubicLinePair) -> int:
        return mu(z.act(self.g), self.lam)

    def __iter__(self):
        return iter((self.g, self.lam))

    def __repr__(self):
        return "Certificate(lam=%r, mu=%d)" % (self.lam, self.mu)

    def to_json(self):
        return {"g": self.g.to_json(), "lambda": self.lam.to_json(), "mu": self.mu}


class StabilityVerdict:
    __slots__ = ("status", "row", "reason", "certificate", "curve_class", "contact")

    def __init__(self, status, row=None, reason=None, certificate=None,
                 curve_class=None, contact=None):
        self.status = status
        self.row = row
        self.reason = reason
        self.certificate = certificate
        self.curve_class = curve_class
        self.contact = contact

    @property
    def semistable(self) -> bool:
        return self.status != "Unstable"

    def __eq__(self, other):
        if not isinstance(other, StabilityVerdict):
            return NotImplemented
        return (self.status, self.row, self.reason) == (other.status, other.row, other.reason)

    def __repr__(self):
        tag = "row %d" % self.row if self.row else "reason (%s)" % self.reason
        return "StabilityVerdict(%s, %s)" % (self.status, tag)

    def to_json(self):
        out = {"status": self.status, "row": self.row, "reason": self.reason,
               "curve": self.curve_class.to_json() if self.curve_class else None,
               "contact": self.contact.to_json() if self.contact else None,
               "certificate": self.certificate.to_json() if self.certificate else None}
        if self.reason:
            out["reason_text"] = REASONS[self.reason]
        return out


def unstable_reasons(z: CubicLinePair, cc: CurveClass = None, ct=None) -> List[str]:
    """Every unstable condition that holds, in the order they are tested."""
    cc = cc or classify_cubic(z.C)
    ct = ct or contact_type(z.C, z.L, cc)
    hold = {
        "v": not cc.reduced,
        "iv": cc.kind in ("ThreeConcurrentLines", "LinePlusDoubleLine", "TripleLine"),
        "ii": ct.kind == "Contained",
        "i": ct.kind == "ThreeTangent",
        "iii": line_through_singular(z.L, cc),
    }
    return [r for r in REASON_ORDER if hold[r]]


def classify(z: CubicLinePair, certify: bool = True) -> StabilityVerdict:
    cc = classify_cubic(z.C)
    ct = contact_type(z.C, z.L, cc)
    reasons = unstable_reasons(z, cc, ct)
    if reasons:
        v = StabilityVerdict("Unstable", reason=reasons[0], curve_class=cc, contact=ct)
        if certify:
            g, lam = destabilizing_witness(z, reasons[0], cc, ct)
            v.certificate = Certificate(g, lam, mu(z.act(g), lam))
        return v
    row = _ROW_OF.get((cc.kind, ct.kind))
    if row is None:
        raise GeometryError("semistable configuration outside the table: %s / %s"
                            % (cc.kind, ct.kind))
    if row in STABLE_ROWS:
        return StabilityVerdict("Stable", row=row, curve_class=cc, contact=ct)
    v = StabilityVerdict("StrictlySemistable", row=row, curve_class=cc, contact=ct)
    if certify:
        g = _semistable_frame(z, row, cc, ct)
        lam = OnePS(1, 0, -1)
        m = mu(z.act(g), lam)
        if m != 0:
            raise NormalFormFailure("certificate frame gives mu = %d, expected 0" % m)
        v.certificate = Certificate(g, lam, m)
    return v


def _semistable_frame(z, row, cc, ct) -> ProjTransform:
    if row == 6:
        # L' tangent to Q: tangency -> e0, L' -> x2, L -> x0
        lp, Q = cc.components
        p = cc.singular[0].point
        q = _meet(z.L, lp)
        return frame(p, q, _other_point(z.L, q))
    # L simply tangent at a smooth point: L -> x2, tangency point -> e0
    p = ct.tangency_point
    return frame(p, _other_point(z.L, p), _basis(_pivot(z.L), z.L.tower))


def _triple_point(cc: CurveClass) -> ProjectivePoint:
    if cc.kind == "ThreeConcurrentLines":
        return cc.singular[0].point
    l, m = cc.components[0], cc.components[2]
    if cc.kind == "TripleLine":
        return _line_points(l)[0]
    return _meet(l, m)


def destabilizing_witness(z: CubicLinePair, reason: Optional[str] = None,
                          cc: CurveClass = None, ct=None) -> Tuple[ProjTransform, OnePS]:
    """g moving z into the shape used for its unstable reason, with the weight.

    ``reason`` may name any condition that holds for z; by default the first
    in REASON_ORDER is used.
    """
    cc = cc or classify_cubic(z.C)
    ct = ct or contact_type(z.C, z.L, cc)
    held = unstable_reasons(z, cc, ct)
    if not held:
        raise StratumMismatch("pair is semistable")
    reason = reason or held[0]
    if reason not in held:
        raise StratumMismatch("reason (%s) does not hold for this pair" % reason)
    L = z.L
    e_piv = _basis(_pivot(L), L.tower)
    if reason == "i":
        p = ct.tangency_point
        g = frame(p, _other_point(L, p), e_piv)
    elif reason == "ii":
        pts = _line_points(L)
        g = frame(pts[0], pts[1], e_piv)
    elif reason == "iii":
        p = next(sp.point for sp in cc.singular if L.evaluate(list(sp.point)).is_zero())
        g = frame(p, _other_point(L, p), e_piv)
    elif reason == "iv":
        p = _triple_point(cc)
        i0 = next(i for i in range(3) if not p[i].is_zero())
        rest = [_basis(i, p[0].tower) for i in range(3) if i != i0]
        g = frame(p, rest[0], rest[1])
    else:
        l = cc.components[0]
        pts = _line_points(l)
        g = frame(pts[0], pts[1], _basis(_pivot(l), l.tower))
    lam = OnePS(*WITNESS_WEIGHTS[reason])
    if mu(z.act(g), lam) >= 0:
        raise NormalFormFailure("witness for reason (%s) does not destabilize" % reason)
    return g, lam


# -- strata normal forms -------------------------------------------------------

Z = {
    3: CubicLinePair.parse("x0*x1*x2", "x0+x1+x2"),
    5: CubicLinePair.parse("x0*(x0*x2 + x1*(x1 + x2))", "x2"),
    6: CubicLinePair.parse("x0*(x0*x2 + x1*(x0 + x1))", "x2"),
    7: CubicLinePair.parse("x0*(x0*x2 + x1^2)", "x2"),
    11: CubicLinePair.parse("x0^2*x2 + x1^2*(x0 + x1)", "x2"),
}


def representative(k: int) -> CubicLinePair:
    return Z[k]


def _diag_after(z, g1, row):
    """The diagonal D with D g1 . z equal to the representative of ``row``."""
    w = z.act(g1)
    C = w.C
    if row == 3:
        b = w.L.line_coeffs()
        return ProjTransform.diag(*b)
    if row == 5:
        al, be, ga = C.coeff((2, 0, 1)), C.coeff((1, 2, 0)), C.coeff((1, 1, 1))
        return ProjTransform.diag(al / ga, 1, ga / be)
    if row == 6:
        al, be, ga = C.coeff((2, 0, 1)), C.coeff((2, 1, 0)), C.coeff((1, 2, 0))
        return ProjTransform.diag(be / ga, 1, al / be)
    if row == 7:
        al, be = C.coeff((2, 0, 1)), C.coeff((1, 2, 0))
        return ProjTransform.diag(al / be, 1, 1)
    al, be, ga = C.coeff((2, 0, 1)), C.coeff((1, 2, 0)), C.coeff((0, 3, 0))
    return ProjTransform.diag(be / ga, 1, al * ga / (be * be))


def normal_form(z: CubicLinePair, verdict: StabilityVerdict = None):
    """(g, z_k) with g.z equal to the stratum representative z_k."""
    v = verdict or classify(z, certify=False)
    if v.row not in Z:
        raise StratumMismatch("normal forms exist for rows 3, 5, 6, 7, 11; got %s" % v)
    cc, ct, L = v.curve_class, v.contact, z.L
    try:
        if v.row == 3:
            pts = sorted((sp.point for sp in cc.singular), key=lambda p: p.sort_key(),
                         reverse=True)
            g1 = frame(*pts)
        elif v.row == 5:
            lp, Q = cc.components
            p0 = _tangency(Q, L)
            p1 = _meet(L, lp)
            p2 = _conic_line_points(Q, lp)[0][0]
            g1 = frame(p0, p1, p2)
        elif v.row == 6:
            lp, Q = cc.components
            p0 = _conic_line_points(Q, L)[0][0]
            g1 = frame(p0, _meet(L, lp), cc.singular[0].point)
        elif v.row == 7:
            lp, Q = cc.components
            g1 = frame(ct.tangency_point, _meet(L, lp), cc.singular[0].point)
        else:
            sp = cc.singular[0]
            p0 = ct.tangency_point
            g1 = frame(p0, _meet(L, sp.tangent_line), sp.point)
        g = _diag_after(z, g1, v.row) @ g1
    except (ZeroDivisionError, FormError) as exc:
        raise NormalFormFailure("normal form construction failed: %s" % exc)
    out = z.act(g)
    if not out.equivalent(Z[v.row]):
        raise NormalFormFailure("row %d transform gave %r" % (v.row, out))
    return g, Z[v.row]


def identification_families():
    """The three one-parameter degenerations of z5, z6, z11 (parameter t)."""
    fams = [
        ("g_t z5", ParamFamily.constant(Z[5]).act_diagonal([(1, 1), (1, 0), (1, -1)]), 5),
        ("g_t^-1 z6", ParamFamily.constant(Z[6]).act_diagonal([(1, -1), (1, 0), (1, 1)]), 6),
        ("h_t z11", ParamFamily.constant(Z[11]).act_diagonal([(1, 0), (1, -1), (1, -2)]), 11),
    ]
    return fams


# -- the cuspidal stratum -------------------------------------------------------


class WCuspCoord:
    """Point of the weighted line P(2,3) attached to a cuspidal pair."""

    __slots__ = ("b1", "b2", "raw", "D", "b_cubed", "c_squared", "row", "g")

    def __init__(self, b1, b2, raw=None, g=None):
        zero = b1.tower.zero() if isinstance(b1, Scalar) else 0
        if b1 == zero and b2 == zero:
            raise ValueError("(b1, b2) must not both vanish")
        self.raw = raw if raw is not None else (b1, b2)
        # canonical representative of the class (l^2 b1, l^3 b2)
        if b1.is_zero():
            b1, b2 = b1.tower.zero(), b1.tower.one()
        elif b2.is_zero():
            b1, b2 = b1.tower.one(), b1.tower.zero()
        else:
            u = b1 ** 3 / (b2 * b2)
            b1, b2 = u, u
        self.b1, self.b2 = b1, b2
        self.D = 4 * b1 ** 3 - 27 * b2 * b2
        self.b_cubed = b1 ** 3 / (b2 * b2) if not b2.is_zero() else None
        self.c_squared = b2 * b2 / b1 ** 3 if not b1.is_zero() else None
        self.row = 10 if not self.D.is_zero() else 11
        self.g = g

    @property
    def point(self):
        return (self.b1, self.b2)

    def __eq__(self, other):
        return isinstance(other, WCuspCoord) and self.point == other.point

    def __hash__(self):
        return hash(self.point)

    def __repr__(self):
        return "WCuspCoord((%s : %s), D=%s)" % (self.b1, self.b2, self.D)

    def to_json(self):
        s = lambda x: None if x is None else str(x)
        return {"weighted_point": [str(self.b1), str(self.b2)],
                "read_off": [str(x) for x in self.raw], "D": str(self.D),
                "b^3": s(self.b_cubed), "c^2": s(self.c_squared), "row": self.row}


CUSP_MODEL = TernaryForm.parse("x0*x2^2 - x1^3")


def _shear(k, coeffs):
    """Transform g with g.F(x) = F(x with x_k replaced by sum coeffs[i] x_i)."""
    rows = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    rows[k] = list(coeffs)
    # act uses F(g^{-1} x), so g^{-1} is the substitution matrix
    return ProjTransform(rows).inverse()


def wcusp_coordinate(z: CubicLinePair, verdict: StabilityVerdict = None) -> WCuspCoord:
    v = verdict or classify(z, certify=False)
    if v.row not in (10, 11):
        raise StratumMismatch("pair is not in rows 10 or 11: %s" % v)
    sp = v.curve_class.singular[0]
    T = sp.tangent_line
    # cusp -> e0, cuspidal tangent -> x2
    g = frame(sp.point, _other_point(T, sp.point), _basis(_pivot(T), T.tower))
    C = z.act(g).C
    al = C.coeff((1, 0, 2))
    c30, c21 = C.coeff((0, 3, 0)), C.coeff((0, 2, 1))
    if al.is_zero() or c30.is_zero():
        raise NormalFormFailure("cusp frame has the wrong shape")
    # complete the cube in x1, then absorb x1 x2^2 and x2^3 into x0
    s1 = _shear(1, [0, 1, -c21 / (3 * c30)])
    g = s1 @ g
    C = z.act(g).C
    c12, c03 = C.coeff((0, 1, 2)), C.coeff((0, 0, 3))
    s0 = _shear(0, [1, -c12 / al, -c03 / al])
    g = s0 @ g
    C = z.act(g).C
    d = ProjTransform.diag(-C.coeff((1, 0, 2)) / C.coeff((0, 3, 0)), 1, 1)
    g = d @ g
    w = z.act(g)
    if not w.C.proportional(CUSP_MODEL):
        raise NormalFormFailure("cusp normalization produced %s" % w.C)
    b0, b1, b2 = w.L.line_coeffs()
    b1, b2 = -b1 / b0, -b2 / b0
    out = WCuspCoord(b1, b2, g=g)
    if out.row != v.row:
        raise NormalFormFailure("discriminant disagrees with the contact type")
    return out


def wcusp_pair(b1, b2) -> CubicLinePair:
    """(x0 x2^2 = x1^3, x0 = b1 x1 + b2 x2)."""
    b1, b2 = as_scalar(b1), as_scalar(b2)
    return CubicLinePair(CUSP_MODEL, TernaryForm.linear(1, -b1, -b2))


# -- stabilizers ----------------------------------------------------------------


class StabilizerReport:
    __slots__ = ("case", "generators", "group", "fixes_pair")

    def __init__(self, case, generators, group, fixes_pair):
        self.case = case
        self.generators = generators
        self.group = group
        self.fixes_pair = fixes_pair

    @property
    def order(self) -> int:
        return len(self.group)

    def __repr__(self):
        return "StabilizerReport(%s, order=%d)" % (self.case, self.order)

    def to_json(self):
        return {"case": self.case, "order": self.order, "fixes_pair": self.fixes_pair,
                "generators": [g.to_json() for g in self.generators]}


def _fixes(g, f: TernaryForm) -> bool:
    return act(g, f).proportional(f)


NODAL_MODEL = TernaryForm.parse("x0^3 + x1^3 - 3*x0*x1*x2")
CONIC_LINE_MODEL = TernaryForm.parse("x2*(x2^2 + x0*x1)")


def _g1(alpha):
    return ProjTransform.diag(1, alpha * alpha, alpha)


SWAP01 = ProjTransform.perm([1, 0, 2])


def stabilizer_probe(z: CubicLinePair, bound: int = 216) -> StabilizerReport:
    """Close the listed generators for the pair's case and check every element.

    For the nodal case the generators stabilize the curve only; the report
    then says so through ``fixes_pair``.
    """
    cc = classify_cubic(z.C)
    if cc.kind == "Smooth":
        if not is_hesse_member(z.C):
            raise StratumMismatch("smooth case expects a Hesse pencil member")
        gens = [g for g in g216().elements if _fixes(g, z.C) and _fixes(g, z.L)]
        case = "smooth"
    elif cc.kind == "Triangle":
        g, zk = normal_form(z)
        gi = g.inverse()
        gens = [gi @ p @ g for p in (ProjTransform.perm([1, 0, 2]), ProjTransform.perm([0, 2, 1]))]
        case = "3-gon"
    elif cc.kind == "IrreducibleNodal":
        if not z.C.proportional(NODAL_MODEL):
            raise StratumMismatch("nodal case expects x0^3 + x1^3 - 3 x0 x1 x2")
        gens = [_g1(ZETA), SWAP01]
        case = "nodal"
    elif cc.kind == "ConicPlusChord":
        if not z.C.proportional(CONIC_LINE_MODEL):
            raise StratumMismatch("conic plus line case expects x2 (x2^2 + x0 x1)")
        b0, b1, b2 = z.L.line_coeffs()
        if b0.is_zero() or b1 != b0:
            raise StratumMismatch("line must be x0 + x1 + a x2")
        gens = [SWAP01] if not b2.is_zero() else [_g1(-1), SWAP01]
        case = "conic+line (a != 0)" if not b2.is_zero() else "conic+line (a = 0)"
    else:
        raise StratumMismatch("no stabilizer case for %s" % cc.kind)
    group = close_group(gens or [ProjTransform.identity()], bound)
    on_curve = all(_fixes(g, z.C) for g in group)
    on_pair = on_curve and all(_fixes(g, z.L) for g in group)
    if not on_curve:
        raise NormalFormFailure("a generated element moves the curve")
    if case != "nodal" and not on_pair:
        raise NormalFormFailure("a generated element moves the line")
    return StabilizerReport(case, gens, group, on_pair)
