"""Blow-up chart atlases for the forgetful maps from SQ x P(V).

Two chart towers are modelled.  Over the affine piece U = Spec k[u, s1, s2]
(u = mu0/mu1, s_k = b_k/b_0) the seven charts U_1..U_7 resolve the map to
BP; over the piece V = Spec k[u, alpha1, alpha2] around one A-line the four
charts V_1..V_4 resolve the map to the GIT quotient.  Every chart coordinate
is a monomial in the base coordinates, so charts are described by integer
exponent matrices and all transitions are monomial.

Fractional powers never appear as radicals: a chart that needs one asks for
a root t of the designated coordinate (coordinate = t^2 or t^3).
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .forms import (CubicLinePair, LaurentForm, ParamFamily, ProjTransform, TernaryForm,
                    random_scalar)
from .geometry import classify_cubic, line_through_singular
from .hesse import (A_VALUES, INFINITY, HessePoint, a_label, g216, hesse_cubic,
                    j_invariant, on_a_line)
from .scalars import BASE, ZETA, Scalar, as_scalar
from .stability import classify

ONE = BASE.one()
ZERO = BASE.zero()
W2 = ZETA * ZETA


class AtlasError(Exception):
    pass


class RadicalRequired(AtlasError):
    """The chart needs a root of one coordinate and none was supplied."""


class ChartDomainError(AtlasError):
    """The point violates the chart's defining constraints."""


# -- chart data -----------------------------------------------------------------
#
# PHI_BASE[j][row] = exponents of (u, s1, s2)[row] in the chart coordinates
# (v0, v1, v2); PHI_COORDS[j][k] = exponents of v_k in (u, s1, s2).

PHI_BASE = {
    1: ((1, 0, 0), (1, 1, 0), (1, 0, 1)),
    2: ((1, 1, 0), (1, 1, 1), (1, 0, 0)),
    3: ((1, 2, 1), (1, 1, 1), (1, 0, 0)),
    4: ((1, 1, 2), (1, 0, 1), (1, 0, 0)),
    5: ((1, 1, 2), (1, 0, 0), (1, 0, 1)),
    6: ((1, 2, 1), (1, 0, 0), (1, 1, 1)),
    7: ((1, 1, 0), (1, 0, 0), (1, 1, 1)),
}

PHI_COORDS = {
    1: ((1, 0, 0), (-1, 1, 0), (-1, 0, 1)),
    2: ((0, 0, 1), (1, 0, -1), (-1, 1, 0)),
    3: ((0, 0, 1), (1, -1, 0), (-1, 2, -1)),
    4: ((0, 0, 1), (1, -2, 1), (0, 1, -1)),
    5: ((0, 1, 0), (1, 1, -2), (0, -1, 1)),
    6: ((0, 1, 0), (1, 0, -1), (-1, -1, 2)),
    7: ((0, 1, 0), (1, -1, 0), (-1, 0, 1)),
}

# Diagonal of the conjugating matrix M_j, exponents in (u, s1, s2).
_H = Fraction(1, 2)
PHI_MATRIX_EXP = {
    1: ((1, 0, 0), (1, 0, 0)),
    2: ((_H, 0, _H), (0, 0, 1)),
    3: ((_H, 0, _H), (0, 0, 1)),
    4: ((0, 1, 0), (0, 0, 1)),
    5: ((0, 1, 0), (0, 0, 1)),
    6: ((0, 1, 0), (_H, _H, 0)),
    7: ((0, 1, 0), (_H, _H, 0)),
}

# chart -> (slot, degree) of the coordinate that must be given as a power of t
PHI_RADICAL = {2: (1, 2), 3: (2, 2), 6: (2, 2), 7: (1, 2)}

# Strata of the (0, 0) tower, as lists of (chart, coordinate slot).
PHI_STRATA = {
    "E0": ((4, 1), (5, 1)),
    "E1": tuple((j, 0) for j in range(1, 8)),
    "E2": ((2, 1), (3, 2), (6, 2), (7, 1)),
    "E3": ((3, 1), (4, 2), (5, 2), (6, 1)),
}

# PSI_BASE[r][row] = exponents of (alpha1, alpha2)[row] in (w0, w1, w2).
PSI_BASE = {
    1: ((0, 1, 0), (0, 1, 1)),
    2: ((0, 3, 1), (0, 2, 1)),
    3: ((0, 2, 3), (0, 1, 2)),
    4: ((0, 1, 2), (0, 0, 1)),
}

# exponents of (w1, w2) in (alpha1, alpha2)
PSI_COORDS = {
    1: ((1, 0), (-1, 1)),
    2: ((1, -1), (-2, 3)),
    3: ((2, -3), (-1, 2)),
    4: ((1, -2), (0, 1)),
}

PSI_RADICAL = {1: (1, 3), 2: (2, 3), 3: (1, 2), 4: (2, 2)}

PSI_STRATA = {
    "E1": ((1, 1), (2, 2)),
    "E2": ((3, 1), (4, 2)),
    "E3": ((2, 1), (3, 2)),
}


def phi_ray(j: int, slot: int) -> Tuple[int, int, int]:
    """Orders of vanishing of (u, s1, s2) along the divisor v_slot = 0 of chart j."""
    return tuple(PHI_BASE[j][row][slot] for row in range(3))


def psi_ray(r: int, slot: int) -> Tuple[int, int]:
    return tuple(PSI_BASE[r][row][slot] for row in range(2))


def phi_transition_exponents(j: int, jp: int):
    """T with v^(jp)_k = prod_l (v^(j)_l)^T[k][l]."""
    return tuple(tuple(sum(PHI_COORDS[jp][k][row] * PHI_BASE[j][row][l] for row in range(3))
                       for l in range(3)) for k in range(3))


# -- points --------------------------------------------------------------------


def _scal(x) -> Scalar:
    return x if isinstance(x, Scalar) else as_scalar(x)


class ChartPoint:
    """A point of chart `index` of the phi tower (a, i) or of the psi tower.

    ``coords`` are the three chart coordinates.  For charts with a fractional
    power, ``root`` is a t with coords[slot] = t^deg; the slot may be given as
    None and is then filled in from the root.
    """

    __slots__ = ("family", "index", "coords", "root", "tower")

    def __init__(self, family: str, index: int, coords: Sequence, root=None, tower=None):
        if family not in ("phi", "psi"):
            raise ChartDomainError("family must be 'phi' or 'psi'")
        table = PHI_RADICAL if family == "phi" else PSI_RADICAL
        nmax = 7 if family == "phi" else 4
        if not 1 <= index <= nmax:
            raise ChartDomainError("no chart %r in the %s tower" % (index, family))
        c = list(coords)
        root = _scal(root) if root is not None else None
        rad = table.get(index)
        if rad is not None and root is not None:
            slot, deg = rad
            if c[slot] is None:
                c[slot] = root ** deg
            elif _scal(c[slot]) != root ** deg:
                raise ChartDomainError("coordinate %d is not root^%d" % (slot, deg))
        elif rad is None and root is not None:
            raise ChartDomainError("chart %d takes no root" % index)
        if any(x is None for x in c):
            raise RadicalRequired("chart %d needs its root to fill the coordinate" % index)
        self.family = family
        self.index = index
        self.coords = tuple(_scal(x) for x in c)
        self.root = root
        if family == "phi":
            tower = tower or (ZERO, 0)
            if tower[0] not in A_VALUES or tower[1] not in (0, 1, 2):
                raise ChartDomainError("tower must be (a, i) with a = 0 or a^3 = 1")
        elif tower not in (None, (ZERO, 0, 0)):
            raise ChartDomainError("only the (0, 0, 0) psi tower is modelled")
        self.tower = tower
        u = self.u()
        if u ** 3 == 1:
            raise ChartDomainError("u^3 = 1 is excluded from the chart")
        if family == "psi" and _in_other_a_lines(*self.base()):
            raise ChartDomainError("point lies on another A-line")

    def u(self) -> Scalar:
        if self.family == "phi":
            return _mono(self.coords, PHI_BASE[self.index][0])
        return self.coords[0]

    def base(self):
        """Image in the base chart: (u, s1, s2) or (u, alpha1, alpha2)."""
        if self.family == "phi":
            return tuple(_mono(self.coords, PHI_BASE[self.index][row]) for row in range(3))
        a1, a2 = (_mono(self.coords, PSI_BASE[self.index][row]) for row in range(2))
        return self.coords[0], a1, a2

    def with_root(self, root) -> "ChartPoint":
        c = list(self.coords)
        c[(PHI_RADICAL if self.family == "phi" else PSI_RADICAL)[self.index][0]] = None
        return ChartPoint(self.family, self.index, c, root, self.tower)

    def needs_root(self) -> bool:
        return self.index in (PHI_RADICAL if self.family == "phi" else PSI_RADICAL)

    def to_json(self):
        out = {"family": self.family, "chart": self.index,
               "coords": [str(x) for x in self.coords],
               "root": str(self.root) if self.root is not None else None}
        if self.family == "phi":
            out["tower"] = [a_label(self.tower[0]), self.tower[1]]
        return out

    def __repr__(self):
        return "ChartPoint(%s, %d, %s)" % (self.family, self.index,
                                           [str(x) for x in self.coords])


def _mono(coords, exps) -> Scalar:
    acc = ONE
    for x, e in zip(coords, exps):
        if e:
            if e < 0 and x.is_zero():
                raise ChartDomainError("monomial is not regular at this point")
            acc = acc * x ** e
    return acc


def _eval_frac(coords, root, rad, exps) -> Scalar:
    """Monomial with possibly half- or third-integer exponent on the radical slot."""
    acc = ONE
    for l, (x, e) in enumerate(zip(coords, exps)):
        e = Fraction(e)
        if e.denominator == 1:
            e = int(e)
            if e:
                if e < 0 and x.is_zero():
                    raise ChartDomainError("monomial is not regular at this point")
                acc = acc * x ** e
            continue
        if rad is None or rad[0] != l or (e * rad[1]).denominator != 1:
            raise AtlasError("fractional exponent off the radical slot")
        if root is None:
            raise RadicalRequired("this chart needs a root of coordinate %d" % l)
        n = int(e * rad[1])
        if n < 0 and root.is_zero():
            raise ChartDomainError("monomial is not regular at this point")
        acc = acc * root ** n
    return acc


def chart_u_weight(j: int, p) -> Scalar:
    """The monomial u_j of chart j at p (ChartPoint or raw triple)."""
    coords = p.coords if isinstance(p, ChartPoint) else tuple(_scal(x) for x in p)
    return _mono(coords, PHI_BASE[j][0])


# -- output ---------------------------------------------------------------------


class ChartFamilyOutput:
    __slots__ = ("pair", "matrix", "strata", "point")

    def __init__(self, pair, matrix, strata, point):
        self.pair = pair
        self.matrix = matrix      # conjugating matrix, None where it degenerates
        self.strata = strata
        self.point = point

    def to_json(self):
        return {"point": self.point.to_json(), "pair": self.pair.to_json(),
                "matrix": self.matrix.to_json() if self.matrix is not None else None,
                "strata": list(self.strata)}


def _form(d) -> TernaryForm:
    return TernaryForm({e: c for e, c in d.items()})


SWAP12 = ProjTransform.perm([0, 2, 1])


def _phi_display(j: int, v, t) -> CubicLinePair:
    """The listed closed forms of the chart outputs."""
    if j >= 5:
        mirror = {5: 4, 6: 3, 7: 2}[j]
        return _phi_display(mirror, v, t).act(SWAP12)
    v0, v1, v2 = v
    if j == 1:
        C = {(3, 0, 0): v0 ** 3, (0, 3, 0): ONE, (0, 0, 3): ONE, (1, 1, 1): -3 * ONE}
        L = {(1, 0, 0): ONE, (0, 1, 0): v1, (0, 0, 1): v2}
    elif j in (2, 3):
        k = t ** 3 if j == 2 else v1 ** 3 * t ** 3
        C = {(0, 3, 0): ONE, (1, 1, 1): -3 * ONE, (3, 0, 0): k * v0 ** 3, (0, 0, 3): k}
        L = {(1, 0, 0): ONE, (0, 1, 0): t * v2 if j == 2 else t, (0, 0, 1): ONE}
    else:
        C = {(0, 3, 0): v1, (0, 0, 3): v1 * v2 ** 3, (3, 0, 0): v1 * v2 ** 3 * v0 ** 3,
             (1, 1, 1): -3 * ONE}
        L = {(1, 0, 0): ONE, (0, 1, 0): ONE, (0, 0, 1): ONE}
    return CubicLinePair(_form(C), _form(L))


def phi_matrix(p: ChartPoint) -> Optional[ProjTransform]:
    """M_j at p, or None where it is singular."""
    j = p.index
    base_exps = [[sum(Fraction(m[row]) * PHI_BASE[j][row][l] for row in range(3))
                  for l in range(3)] for m in PHI_MATRIX_EXP[j]]
    rad = PHI_RADICAL.get(j)
    ms = [_eval_frac(p.coords, p.root, rad, e) for e in base_exps]
    if any(m.is_zero() for m in ms):
        return None
    return ProjTransform.diag(1, ms[0], ms[1])


def phi_base_pair(p: ChartPoint) -> Optional[CubicLinePair]:
    """(V(F_(j)), V(S_(j))): the forgetful map evaluated at the image of p."""
    u, s1, s2 = p.base()
    F = _form({(3, 0, 0): u, (0, 3, 0): u, (0, 0, 3): u, (1, 1, 1): -3 * ONE})
    return CubicLinePair(F, TernaryForm.linear(1, s1, s2))


def tower_transform(a: Scalar, i: int) -> ProjTransform:
    """Change of coordinates y -> x that turns the (a, i) tower into the (0, 0) one.

    With A the substitution matrix of b^(a) and P the cyclic shift putting
    b^(a)_i first, phi on U^(a, i) is (A P) applied to phi on U^(0, 0).
    """
    if a.is_zero():
        A = ProjTransform.identity()
    else:
        A = ProjTransform([[1, 1, 1], [1, ZETA, W2], [a, a * W2, a * ZETA]])
    pinv = ProjTransform([[1 if l == (i + k) % 3 else 0 for l in range(3)] for k in range(3)])
    return A @ pinv.inverse()


def phi_on_base(a, i: int, u, s1, s2) -> CubicLinePair:
    """phi at the point of U^(a, i) with coordinates (u^(a), s_[i+1],i, s_[i+2],i).

    The Hesse parameter and the line are recovered by inverting the
    substitution tables; ``a`` may also be INFINITY.
    """
    u, s1, s2 = _scal(u), _scal(s1), _scal(s2)
    bt = [None] * 3
    bt[i], bt[(i + 1) % 3], bt[(i + 2) % 3] = ONE, s1, s2
    if a == INFINITY:
        m = HessePoint(ONE, u)
        b = bt
    elif a.is_zero():
        m = HessePoint(u, ONE)
        b = bt
    else:
        m0p, m1p = u, ONE
        m0 = (m1p - m0p) / 3
        m1 = a * a * (m0p + m0)
        m = HessePoint(m0, m1)
        Ai = ProjTransform([[1, 1, 1], [1, ZETA, W2], [a, a * W2, a * ZETA]]).inverse().m
        b = [sum((bt[r] * Ai[r][c] for r in range(3)), ZERO) for c in range(3)]
    return CubicLinePair(hesse_cubic(m), TernaryForm.linear(*b))


def phi_strata(p: ChartPoint) -> Tuple[str, ...]:
    return tuple(name for name, loci in PHI_STRATA.items()
                 if any(j == p.index and p.coords[s].is_zero() for j, s in loci))


def phi_tilde(j: int, p: ChartPoint) -> ChartFamilyOutput:
    if not isinstance(p, ChartPoint):
        p = ChartPoint("phi", j, p)
    if p.family != "phi" or p.index != j:
        raise ChartDomainError("point is not in chart %d of the phi tower" % j)
    if p.needs_root() and p.root is None:
        raise RadicalRequired("chart %d needs a square root of coordinate %d"
                              % (j, PHI_RADICAL[j][0]))
    z = _phi_display(j, p.coords, p.root)
    T = tower_transform(*p.tower)
    M = phi_matrix(p)
    if p.tower != (ZERO, 0):
        z = z.act(T)
        if M is not None:
            M = T @ M @ T.inverse()
    return ChartFamilyOutput(z, M, phi_strata(p), p)


def in_bp(z: CubicLinePair, cc=None) -> bool:
    """Reduced, at worst nodal, and the line misses the singular points."""
    cc = cc or classify_cubic(z.C)
    if cc.kind not in ("Smooth", "IrreducibleNodal", "Triangle", "ConicPlusChord"):
        return False
    return not line_through_singular(z.L, cc)


# -- psi tower -----------------------------------------------------------------


def _psi_display(r: int, w, t) -> CubicLinePair:
    w0, w1, w2 = w
    k = w0 ** 3
    if r == 1:
        lin = ((0, 1, 0), ONE, (0, 0, 1), t * w2)
        cf = (t ** 6, t ** 4, t ** 2)
        xyz = -3 * t
    elif r == 2:
        cf = (w1 ** 6 * w2 ** 2, w1 ** 4 * t ** 4, w1 ** 2 * t ** 2)
        xyz = -3 * w1 * t
        lin = ((0, 1, 0), ONE, (0, 0, 1), t)
    elif r == 3:
        cf = (w1 ** 3 * w2 ** 6, w1 ** 2 * w2 ** 4, w1 * w2 ** 2)
        xyz = -3 * t * w2
        lin = ((0, 1, 0), t, (0, 0, 1), ONE)
    else:
        cf = (w2 ** 3, w2 ** 2, w2)
        xyz = -3 * t
        lin = ((0, 1, 0), w1 * t, (0, 0, 1), ONE)
    # ((w0^3 - 1) x2^3 = 3 x0 x1^2 + xyz x0 x1 x2 + k x0 (cf0 x0^2 - 3 cf1 x0 x2 + 3 cf2 x2^2)
    C = {(0, 0, 3): k - 1, (1, 2, 0): -3 * ONE, (1, 1, 1): -xyz,
         (3, 0, 0): -k * cf[0], (2, 0, 1): 3 * k * cf[1], (1, 0, 2): -3 * k * cf[2]}
    L = {(1, 0, 0): ONE, lin[0]: lin[1], lin[2]: lin[3]}
    return CubicLinePair(_form(C), _form(L))


def _psi_root_power(r: int, p: "ChartPoint") -> Scalar:
    """alpha1^(1/3) (r = 1, 2) or alpha2^(1/2) (r = 3, 4) in terms of the root."""
    w0, w1, w2 = p.coords
    t = p.root
    return {1: t, 2: w1 * t, 3: t * w2, 4: t}[r]


def psi_matrix(p: ChartPoint) -> Optional[ProjTransform]:
    _, a1, a2 = p.base()
    c = _psi_root_power(p.index, p)
    d = a1 if p.index <= 2 else c ** 3
    try:
        return ProjTransform([[1, 1, 1], [0, d, 0], [0, c * c, c * c]])
    except Exception:
        return None


def psi_base_pair(p: ChartPoint) -> CubicLinePair:
    u, a1, a2 = p.base()
    F = _form({(3, 0, 0): u ** 3, (0, 3, 0): ONE, (0, 0, 3): ONE, (1, 1, 1): -3 * ONE})
    return CubicLinePair(F, TernaryForm.linear(1, a1 + a2 + 1, a2 + 1))


def _in_other_a_lines(u, a1, a2) -> bool:
    v2 = a2 + 1
    v1 = a1 + v2
    for j in (1, 2):
        c = W2 ** j
        if v2 == c and v1 == c * v2:
            return True
    if u.is_zero():
        return False
    hits = on_a_line(HessePoint(u, ONE), (ONE, u * v1, u * v2))
    return any(h != (0, 0) for h in hits)


def psi_strata(p: ChartPoint) -> Tuple[str, ...]:
    return tuple(name for name, loci in PSI_STRATA.items()
                 if any(r == p.index and p.coords[s].is_zero() for r, s in loci))


def psi_hat(r: int, p: ChartPoint) -> ChartFamilyOutput:
    if not isinstance(p, ChartPoint):
        p = ChartPoint("psi", r, p)
    if p.family != "psi" or p.index != r:
        raise ChartDomainError("point is not in chart %d of the psi tower" % r)
    if p.root is None:
        slot, deg = PSI_RADICAL[r]
        raise RadicalRequired("chart %d needs a root of degree %d of coordinate %d"
                              % (r, deg, slot))
    z = _psi_display(r, p.coords, p.root)
    return ChartFamilyOutput(z, psi_matrix(p), psi_strata(p), p)


def hatE_stratum(r: int, p: ChartPoint) -> bool:
    """Whether p lies on the exceptional set of the second tower."""
    if not isinstance(p, ChartPoint):
        p = ChartPoint("psi", r, p)
    return bool(psi_strata(p))


# -- stratification -------------------------------------------------------------


class StratumLabel:
    __slots__ = ("strata", "label")

    def __init__(self, strata, label):
        self.strata = strata
        self.label = label

    def to_json(self):
        return {"strata": list(self.strata), "label": self.label}

    def __repr__(self):
        return "StratumLabel(%s, %s)" % (self.label, self.strata)


def exceptional_stratum_class(j: int, p: ChartPoint) -> StratumLabel:
    """Curve type predicted by which exceptional strata contain p."""
    if not isinstance(p, ChartPoint):
        p = ChartPoint("phi", j, p)
    st = phi_strata(p)
    if "E0" in st:
        lab = "Triangle"
    elif "E2" in st or "E3" in st:
        lab = "ConicPlusChord"
    elif "E1" in st:
        lab = "IrreducibleNodal"
    else:
        lab = "Smooth"
    return StratumLabel(st, lab)


# -- verification reports --------------------------------------------------------


class SampleRecord:
    __slots__ = ("point", "passed", "witness", "notes")

    def __init__(self, point, passed, witness=None, notes=None):
        self.point = point
        self.passed = passed
        self.witness = witness
        self.notes = notes or {}

    def to_json(self):
        return {"point": self.point.to_json() if hasattr(self.point, "to_json") else self.point,
                "passed": self.passed,
                "witness": self.witness.to_json() if self.witness is not None else None,
                "notes": self.notes}


class VerificationReport:
    def __init__(self, name, chart, records, extra=None):
        self.name = name
        self.chart = chart
        self.records = records
        self.extra = extra or {}

    @property
    def passed(self) -> bool:
        return bool(self.records) and all(r.passed for r in self.records)

    @property
    def failures(self):
        return [r for r in self.records if not r.passed]

    def to_json(self):
        return {"check": self.name, "chart": self.chart, "passed": self.passed,
                "samples": len(self.records), "failures": len(self.failures),
                "records": [r.to_json() for r in self.records], **self.extra}


def _rng(rng):
    if isinstance(rng, random.Random):
        return rng
    return random.Random(0 if rng is None else rng)


def _nonzero(rng, bound=4):
    return random_scalar(rng, bound, nonzero=True)


def _flip(family: str, index: int, c: Scalar) -> ProjTransform:
    """Coordinate change undoing root -> c * root."""
    if family == "phi":
        return ProjTransform.diag(1, c, 1) if index in (2, 3) else ProjTransform.diag(1, 1, c)
    if index in (1, 2):
        return ProjTransform.diag(1, 1, c)
    return ProjTransform.diag(1, c, 1)


def root_flip_holds(out: ChartFamilyOutput) -> bool:
    """Changing the root by a root of unity gives the same pair after the flip."""
    p = out.point
    if p.root is None:
        return True
    table = PHI_RADICAL if p.family == "phi" else PSI_RADICAL
    deg = table[p.index][1]
    units = [-ONE] if deg == 2 else [ZETA, W2]
    fn = phi_tilde if p.family == "phi" else psi_hat
    for c in units:
        q = p.with_root(p.root * c)
        z2 = fn(p.index, q).pair
        g = _flip(p.family, p.index, c)
        if p.family == "phi" and p.tower != (ZERO, 0):
            T = tower_transform(*p.tower)
            g = T @ g @ T.inverse()
        if not z2.act(g).equivalent(out.pair):
            return False
    return True


def random_phi_point(j: int, rng, exceptional: Sequence[int] = (), tower=None) -> ChartPoint:
    """Random point of chart j, with the listed coordinate slots set to zero."""
    rad = PHI_RADICAL.get(j)
    while True:
        c = [ZERO if l in exceptional else _nonzero(rng) for l in range(3)]
        root = None
        if rad:
            root = ZERO if rad[0] in exceptional else _nonzero(rng)
            c[rad[0]] = None
        try:
            return ChartPoint("phi", j, c, root, tower)
        except ChartDomainError:
            continue


def random_psi_point(r: int, rng, exceptional: Sequence[int] = ()) -> ChartPoint:
    slot, _ = PSI_RADICAL[r]
    while True:
        c = [ZERO if l in exceptional else _nonzero(rng) for l in range(3)]
        root = ZERO if slot in exceptional else _nonzero(rng)
        c[slot] = None
        try:
            return ChartPoint("psi", r, c, root)
        except ChartDomainError:
            continue


def verify_phi_extension(j: int, samples: int = 100, rng=None, tower=None) -> VerificationReport:
    """Off the exceptional set the chart output is M_j applied to phi(pi(p)).

    The base pair is computed from the substitution tables, independently of
    the listed closed forms.
    """
    rng = _rng(rng)
    tower = tower or (ZERO, 0)
    recs = []
    for _ in range(samples):
        p = random_phi_point(j, rng, tower=tower)
        out = phi_tilde(j, p)
        u, s1, s2 = p.base()
        direct = phi_on_base(tower[0], tower[1], u, s1, s2)
        M = out.matrix
        ok_matrix = M is not None and direct.act(M).equivalent(out.pair)
        cc = classify_cubic(out.pair.C)
        ok_bp = in_bp(out.pair, cc)
        ok_flip = root_flip_holds(out)
        recs.append(SampleRecord(p, ok_matrix and ok_bp and ok_flip, M,
                                 {"matrix": ok_matrix, "bp": ok_bp, "root_flip": ok_flip,
                                  "curve": cc.kind}))
    return VerificationReport("phi-extension", j, recs,
                              {"tower": [a_label(tower[0]), tower[1]]})


def _regular_zero_slots(T) -> List[int]:
    return [l for l in range(3) if all(T[k][l] >= 0 for k in range(3))]


def _r_monomial(r, exps) -> Optional[Scalar]:
    acc = ONE
    for x, e in zip(r, exps):
        if e.denominator != 1:
            return None
        e = int(e)
        if e < 0 and x.is_zero():
            return None
        if e:
            acc = acc * x ** e
    return acc


def overlap_points(j: int, jp: int, rng, zero_slots=()):
    """A pair of chart points (p in U_j, p' in U_jp) representing one point.

    All chart-j coordinates are squares r_l^2, so every coordinate and every
    root on either side is a monomial in the r_l.  Returns (p, p', r, T).
    """
    T = phi_transition_exponents(j, jp)
    while True:
        r = [ZERO if l in zero_slots else _nonzero(rng, 3) for l in range(3)]
        v = [x * x for x in r]
        vp = [_r_monomial(r, [Fraction(2 * T[k][l]) for l in range(3)]) for k in range(3)]
        if any(x is None for x in vp):
            raise ChartDomainError("point is not in the overlap")
        root = r[PHI_RADICAL[j][0]] if j in PHI_RADICAL else None
        rootp = None
        if jp in PHI_RADICAL:
            rootp = _r_monomial(r, [Fraction(T[PHI_RADICAL[jp][0]][l]) for l in range(3)])
        try:
            p = ChartPoint("phi", j, v, root)
            pp = ChartPoint("phi", jp, vp, rootp)
        except ChartDomainError:
            continue
        return p, pp, r, T


def _matrix_r_exponents(j: int, vexp_to_r) -> List[List[Fraction]]:
    out = []
    for m in PHI_MATRIX_EXP[j]:
        ve = [sum(Fraction(m[row]) * PHI_BASE[j][row][l] for row in range(3)) for l in range(3)]
        out.append(vexp_to_r(ve))
    return out


def transition_witness(j: int, jp: int, r, T) -> Optional[ProjTransform]:
    """Diag(1, d1, d2) = M_jp M_j^{-1} as a monomial in the r_l, if regular."""
    own = _matrix_r_exponents(j, lambda ve: [2 * e for e in ve])
    other = _matrix_r_exponents(jp, lambda ve: [sum(2 * ve[k] * T[k][l] for k in range(3))
                                                for l in range(3)])
    ds = []
    for a, b in zip(other, own):
        d = _r_monomial(r, [x - y for x, y in zip(a, b)])
        if d is None or d.is_zero():
            return None
        ds.append(d)
    return ProjTransform.diag(1, ds[0], ds[1])


def verify_phi_transition(j: int, jp: int, samples: int = 50, rng=None,
                          exceptional: bool = True) -> VerificationReport:
    """The two chart outputs agree on overlap samples via the constructed witness.

    Half of the samples (when ``exceptional``) put a coordinate of chart j to
    zero wherever that stays inside the overlap.
    """
    rng = _rng(rng)
    T = phi_transition_exponents(j, jp)
    zslots = _regular_zero_slots(T) if exceptional else []
    recs = []
    for n in range(samples):
        zero = (zslots[(n // 2) % len(zslots)],) if zslots and n % 2 == 1 else ()
        p, pp, r, _ = overlap_points(j, jp, rng, zero)
        z, zp = phi_tilde(j, p).pair, phi_tilde(jp, pp).pair
        D = transition_witness(j, jp, r, T)
        ok = D is not None and z.act(D).equivalent(zp)
        notes = {"other": pp.to_json(), "zero_slots": list(zero)}
        if (j, jp) == (1, 2) and zero == (0,):
            # the slice v0 = 0: compare with the displayed matrix
            S = _stated_12(p, r)
            notes["stated"] = S.to_json()
            notes["stated_is_inverse_of_witness"] = D is not None and (S @ D) == ProjTransform.identity()
            notes["stated_by_substitution"] = _by_substitution(S, z).equivalent(zp)
            notes["stated_by_action"] = z.act(S).equivalent(zp)
        recs.append(SampleRecord(p, ok, D, notes))
    return VerificationReport("phi-transition", [j, jp], recs)


def _stated_12(p: ChartPoint, r) -> ProjTransform:
    """The diagonal matrix displayed for the (1, 2) transition on v0 = 0.

    With v2 = v^(1)_2 = r^2 it reads Diag(1, 1/r, 1/r^2).
    """
    v2 = p.coords[2]
    return ProjTransform.diag(1, r[2].inverse(), v2.inverse())


def _by_substitution(S: ProjTransform, z: CubicLinePair) -> CubicLinePair:
    """The pair x -> z(S x), i.e. the action read as F(Mx)."""
    return z.act(S.inverse())


def verify_phi_strata(j: int, values=None) -> VerificationReport:
    """Exhaustive grid: the stratum label equals the classification of the output."""
    values = values if values is not None else GRID_VALUES
    recs = []
    rad = PHI_RADICAL.get(j)
    for a in values:
        for b in values:
            for c in values:
                trip = [a, b, c]
                root = None
                if rad:
                    root = trip[rad[0]]
                    trip[rad[0]] = None
                try:
                    p = ChartPoint("phi", j, trip, root)
                except ChartDomainError:
                    continue
                lab = exceptional_stratum_class(j, p)
                out = phi_tilde(j, p)
                cc = classify_cubic(out.pair.C)
                ok = cc.kind == lab.label and in_bp(out.pair, cc)
                recs.append(SampleRecord(p, ok, None, {"label": lab.label, "curve": cc.kind,
                                                      "strata": list(lab.strata)}))
    return VerificationReport("phi-strata", j, recs)


GRID_VALUES = (ZERO, ONE, -ONE, 2 * ONE, ZETA)


def verify_psi_extension(r: int, samples: int = 100, rng=None,
                         exceptional_every: int = 3) -> VerificationReport:
    """Outputs are semistable, equal N_r applied to the base pair off the
    exceptional set, and do not depend on the root.

    Every ``exceptional_every``-th sample sits on the exceptional set.
    """
    rng = _rng(rng)
    loci = [s for name, ls in PSI_STRATA.items() for (rr, s) in ls if rr == r]
    recs = []
    for n in range(samples):
        exc = (loci[(n // exceptional_every) % len(loci)],) \
            if loci and exceptional_every and n % exceptional_every == 0 else ()
        if n % exceptional_every == 0 and n % 2 == 0:
            exc = exc + (0,)   # w0 = 0 as well
        p = random_psi_point(r, rng, exc)
        out = psi_hat(r, p)
        v = classify(out.pair, certify=False)
        notes = {"status": v.status, "row": v.row, "reason": v.reason,
                 "exceptional": bool(out.strata)}
        ok_ss = v.semistable
        ok_cusp = hatE_stratum(r, p) == (v.curve_class.kind == "IrreducibleCuspidal")
        ok_matrix = True
        if not out.strata:
            N = out.matrix
            ok_matrix = N is not None and psi_base_pair(p).act(N).equivalent(out.pair)
        ok_flip = root_flip_holds(out)
        notes.update(matrix=ok_matrix, root_flip=ok_flip, cusp_match=ok_cusp)
        recs.append(SampleRecord(p, ok_ss and ok_cusp and ok_matrix and ok_flip,
                                 out.matrix if not out.strata else None, notes))
    return VerificationReport("psi-extension", r, recs)


def verify_psi_strata(r: int, values=None) -> VerificationReport:
    values = values if values is not None else GRID_VALUES
    slot, _ = PSI_RADICAL[r]
    recs = []
    for a in values:
        for b in values:
            for c in values:
                trip = [a, b, c]
                root = trip[slot]
                trip[slot] = None
                try:
                    p = ChartPoint("psi", r, trip, root)
                except ChartDomainError:
                    continue
                out = psi_hat(r, p)
                v = classify(out.pair, certify=False)
                cusp = v.curve_class.kind == "IrreducibleCuspidal"
                ok = v.semistable and hatE_stratum(r, p) == cusp
                recs.append(SampleRecord(p, ok, None, {"cuspidal": cusp, "status": v.status,
                                                      "strata": list(out.strata)}))
    return VerificationReport("psi-strata", r, recs)


# -- graph closure and the 3-tangent stratum ---------------------------------------


class GraphClosure:
    __slots__ = ("family", "g_diag", "first", "second", "moved")

    def __init__(self, family, g_diag, moved, first, second):
        self.family = family
        self.g_diag = g_diag
        self.moved = moved
        self.first = first
        self.second = second

    def to_json(self):
        return {"family": repr(self.family), "first_limit": self.first.to_json(),
                "second_limit": self.second.to_json()}


def graph_closure_family(b1, b2, B1, B2) -> GraphClosure:
    """C_t: x0 x2^2 = x1^3 + B1 t^4 x0^2 x1 + B2 t^6 x0^3 with L: x0 = b1 x1 + b2 x2.

    ``first`` is the raw limit; ``second`` is the limit after Diag(1, t^-2, t^-3).
    """
    b1, b2, B1, B2 = map(_scal, (b1, b2, B1, B2))
    if b1.is_zero() and b2.is_zero():
        raise ValueError("(b1, b2) must be nonzero")
    if B1.is_zero() and B2.is_zero():
        raise ValueError("(B1, B2) must be nonzero")
    C = LaurentForm({(1, 0, 2): {0: ONE}, (0, 3, 0): {0: -ONE},
                     (2, 1, 0): {4: -B1}, (3, 0, 0): {6: -B2}}, 3)
    L = LaurentForm({(1, 0, 0): {0: ONE}, (0, 1, 0): {0: -b1}, (0, 0, 1): {0: -b2}}, 1)
    fam = ParamFamily(C, L)
    g = [(1, 0), (1, -2), (1, -3)]
    moved = fam.act_diagonal(g)
    return GraphClosure(fam, g, moved, fam.limit_at_zero(), moved.limit_at_zero())


def weierstrass_pair(B1, B2) -> CubicLinePair:
    B1, B2 = _scal(B1), _scal(B2)
    return CubicLinePair(_form({(1, 0, 2): ONE, (0, 3, 0): -ONE, (2, 1, 0): -B1,
                                (3, 0, 0): -B2}), TernaryForm.linear(1, 0, 0))


def cusp_pair(b1, b2) -> CubicLinePair:
    return CubicLinePair(_form({(1, 0, 2): ONE, (0, 3, 0): -ONE}),
                         TernaryForm.linear(1, -_scal(b1), -_scal(b2)))


def z_of(mu) -> CubicLinePair:
    """(x0^3 + x1^3 + x2^3 - 3 mu x0 x1 x2, mu x0 + x1 + x2)."""
    mu = _scal(mu)
    return CubicLinePair(hesse_cubic(HessePoint(ONE, mu)), TernaryForm.linear(mu, 1, 1))


def nodal_tangent_pair() -> CubicLinePair:
    return CubicLinePair(_form({(0, 3, 0): ONE, (0, 0, 3): ONE, (1, 1, 1): -3 * ONE}),
                         TernaryForm.linear(1, 1, 1))


def z_rescaled(nu) -> CubicLinePair:
    """z(nu) after x0 -> x0 / nu: (nu^-3 x0^3 + x1^3 + x2^3 - 3 x0 x1 x2, x0 + x1 + x2)."""
    nu = _scal(nu)
    return CubicLinePair(_form({(3, 0, 0): nu.inverse() ** 3, (0, 3, 0): ONE, (0, 0, 3): ONE,
                                (1, 1, 1): -3 * ONE}), TernaryForm.linear(1, 1, 1))


def mu_to_one_family() -> ParamFamily:
    """z((mu + 2)/(mu - 1)) rescaled, with mu = 1 + t and denominators cleared."""
    # ((mu - 1)/(mu + 2))^3 = t^3 / (3 + t)^3
    cube = {0: 27 * ONE, 1: 27 * ONE, 2: 9 * ONE, 3: ONE}
    C = LaurentForm({(3, 0, 0): {3: ONE}, (0, 3, 0): dict(cube), (0, 0, 3): dict(cube),
                     (1, 1, 1): {k: -3 * v for k, v in cube.items()}}, 3)
    L = LaurentForm({(1, 0, 0): {0: ONE}, (0, 1, 0): {0: ONE}, (0, 0, 1): {0: ONE}}, 1)
    return ParamFamily(C, L)


class WTPoint:
    __slots__ = ("j", "pair", "witness", "partner")

    def __init__(self, j, pair, witness=None, partner=None):
        self.j = j
        self.pair = pair
        self.witness = witness
        self.partner = partner

    def to_json(self):
        return {"j": str(self.j), "pair": self.pair.to_json(),
                "witness": self.witness.to_json() if self.witness is not None else None}


def identification_witness(mu) -> Optional[ProjTransform]:
    """g with g . z(mu) = z((mu + 2)/(mu - 1)) rescaled in x0.

    The element of G216 moving z(mu) to z(nu) is found by search; the
    rescaling Diag(nu, 1, 1) then brings the line to x0 + x1 + x2.
    """
    mu = _scal(mu)
    nu = (mu + 2) / (mu - 1)
    a, b = z_of(mu), z_of(nu)
    for g in g216():
        if a.act(g).equivalent(b):
            return ProjTransform.diag(nu, 1, 1) @ g
    return None


def wt_j_match(m, witness: bool = False) -> WTPoint:
    """Coordinate of the 3-tangent stratum attached to z(mu).

    Smooth members give their j-invariant; mu^3 = 1 gives the nodal point,
    reached as the mu -> 1 limit.  With ``witness`` the identification with
    the rescaled z((mu + 2)/(mu - 1)) is constructed and checked.
    """
    if isinstance(m, HessePoint):
        if m.mu0.is_zero():
            raise ValueError("mu = infinity gives the triangle, which has no 3-tangent")
        mu = m.mu1 / m.mu0
    else:
        mu = _scal(m)
    if mu ** 3 == 1:
        return WTPoint(INFINITY, mu_to_one_family().limit_at_zero())
    z = z_of(mu)
    out = WTPoint(j_invariant(HessePoint(ONE, mu)), z)
    if witness and not (mu + 2).is_zero():
        g = identification_witness(mu)
        partner = z_rescaled((mu + 2) / (mu - 1))
        if g is None or not z.act(g).equivalent(partner):
            raise AtlasError("no witness for the identification at mu = %s" % mu)
        out.witness, out.partner = g, partner
    return out


def verify_wt_identification(samples: int = 10, rng=None) -> VerificationReport:
    rng = _rng(rng)
    recs = []
    while len(recs) < samples:
        mu = random_scalar(rng, 6)
        if mu ** 3 == 1 or (mu + 2).is_zero():
            continue
        g = identification_witness(mu)
        partner = z_rescaled((mu + 2) / (mu - 1))
        ok = g is not None and z_of(mu).act(g).equivalent(partner)
        recs.append(SampleRecord({"mu": str(mu)}, ok, g))
    return VerificationReport("wt-identification", None, recs)
