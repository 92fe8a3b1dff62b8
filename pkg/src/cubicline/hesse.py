"""The Hesse pencil mu0 (x0^3 + x1^3 + x2^3) = 3 mu1 x0 x1 x2, its symmetry
group of order 216, the induced action on the parameter line, fibres of the
forgetful map, base loci and the j-invariant."""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .forms import CubicLinePair, ProjTransform, ProjectivePoint, TernaryForm, act
from .geometry import contact_type
from .scalars import BASE, ZETA, Scalar, as_scalar

ONE = BASE.one()
ZERO = BASE.zero()
W = ZETA
W2 = ZETA * ZETA
CUBE_ROOTS = (ONE, W, W2)
INFINITY = "infinity"


class ClosureBoundExceeded(Exception):
    pass


class DegenerateFiber(Exception):
    pass


class HessePoint(ProjectivePoint):
    """(mu0 : mu1) on the parameter line of the pencil."""

    __slots__ = ()

    def __init__(self, mu0, mu1=None):
        if mu1 is None:
            mu0, mu1 = mu0
        super().__init__([mu0, mu1])

    @property
    def mu0(self) -> Scalar:
        return self.coords[0]

    @property
    def mu1(self) -> Scalar:
        return self.coords[1]

    @classmethod
    def from_mu(cls, mu):
        """The member x0^3 + x1^3 + x2^3 - 3 mu x0 x1 x2, i.e. (1 : mu)."""
        return cls(ONE, as_scalar(mu))


def hesse_cubic(m: HessePoint) -> TernaryForm:
    m0, m1 = m.mu0, m.mu1
    return TernaryForm({(3, 0, 0): m0, (0, 3, 0): m0, (0, 0, 3): m0,
                        (1, 1, 1): -3 * m1}, degree=3)


def hesse_point_of(F: TernaryForm) -> HessePoint:
    """Inverse of hesse_cubic; raises ValueError if F is not a pencil member."""
    allowed = {(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)}
    if F.degree != 3 or not set(F.coeffs) <= allowed:
        raise ValueError("not a Hesse pencil member: %s" % F)
    c = F.coeff
    if not (c((3, 0, 0)) == c((0, 3, 0)) == c((0, 0, 3))):
        raise ValueError("not a Hesse pencil member: %s" % F)
    return HessePoint(c((3, 0, 0)), c((1, 1, 1)) / -3)


def is_hesse_member(F: TernaryForm) -> bool:
    try:
        hesse_point_of(F)
        return True
    except ValueError:
        return False


def is_singular_member(m: HessePoint) -> bool:
    return m.mu0.is_zero() or (m.mu1 ** 3 == m.mu0 ** 3)


# -- groups --------------------------------------------------------------------


class MatrixGroup:
    """Finite subgroup of PGL(3), elements stored by canonical scaling."""

    def __init__(self, elements: Sequence[ProjTransform], generators=()):
        self.elements = [g.normalized() for g in elements]
        self.generators = list(generators)
        self._keys = {g.key() for g in self.elements}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: ProjTransform) -> bool:
        return g.key() in self._keys

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_closed(self) -> bool:
        for a in self.elements:
            if a.inverse() not in self:
                return False
            for b in self.generators:
                if (a @ b) not in self:
                    return False
        return True

    def to_json(self):
        return {"order": self.order, "generators": [g.to_json() for g in self.generators]}


def close_group(gens: Sequence[ProjTransform], bound: int = 216) -> MatrixGroup:
    """Breadth-first closure of the generated group, at most ``bound`` elements."""
    e = ProjTransform.identity()
    seen = {e.key(): e}
    queue = deque([e])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = (a @ g).normalized()
            k = b.key()
            if k not in seen:
                seen[k] = b
                if len(seen) > bound:
                    raise ClosureBoundExceeded("closure exceeds %d elements" % bound)
                queue.append(b)
    return MatrixGroup(list(seen.values()), gens)


SIGMA = ProjTransform.diag(1, W, W2)
TAU = ProjTransform([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
SIGMA1 = ProjTransform([[1, 1, 1], [1, W, W2], [1, W2, W]])
SIGMA2 = ProjTransform([[W, 0, 0], [0, 0, 1], [0, 1, 0]])
SIGMA3 = ProjTransform([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
GENERATORS = {"sigma": SIGMA, "tau": TAU, "sigma1": SIGMA1, "sigma2": SIGMA2}


@lru_cache(maxsize=None)
def g216() -> MatrixGroup:
    return close_group([SIGMA, TAU, SIGMA1, SIGMA2], bound=216)


@lru_cache(maxsize=None)
def level_subgroup() -> MatrixGroup:
    """The subgroup generated by sigma, tau, sigma3 (acts trivially on mu)."""
    return close_group([SIGMA, TAU, SIGMA3], bound=216)


# -- action on the parameter line -----------------------------------------------


def sq13_action(g: str, m: HessePoint) -> HessePoint:
    """Closed-form action of a named generator on (mu0 : mu1)."""
    m0, m1 = m.mu0, m.mu1
    if g in ("sigma", "tau", "sigma3"):
        return HessePoint(m0, m1)
    if g == "sigma1":
        return HessePoint(m1 - m0, m1 + 2 * m0)
    if g == "sigma2":
        return HessePoint(m0, W2 * m1)
    raise ValueError("unknown generator %r" % g)


def matrix_action(g: ProjTransform, m: HessePoint) -> HessePoint:
    """Action read off from g . hesse_cubic(m)."""
    return hesse_point_of(act(g, hesse_cubic(m)))


def orbit_formula(m: HessePoint) -> List[HessePoint]:
    """(mu0 : a mu1) and (b mu1 - mu0 : c (b mu1 + 2 mu0)) over cube roots a, b, c."""
    m0, m1 = m.mu0, m.mu1
    pts = [HessePoint(m0, a * m1) for a in CUBE_ROOTS]
    pts += [HessePoint(b * m1 - m0, c * (b * m1 + 2 * m0)) for b in CUBE_ROOTS for c in CUBE_ROOTS]
    return _dedup(pts)


def _dedup(pts):
    out, seen = [], set()
    for p in pts:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return sorted(out, key=lambda p: p.sort_key())


def orbit_and_stabilizer(m: HessePoint) -> Tuple[List[HessePoint], int]:
    G = g216()
    images = [matrix_action(g, m) for g in G]
    stab = sum(1 for p in images if p == m)
    return _dedup(images), stab


def j_invariant(m) -> object:
    """mu^3 (mu^3 + 8)^3 / (mu^3 - 1)^3 with mu = mu1 / mu0.

    Homogenized: mu1^3 (mu1^3 + 8 mu0^3)^3 / (mu0^3 (mu1^3 - mu0^3)^3).  The
    token INFINITY is returned exactly at the singular members.
    """
    if not isinstance(m, HessePoint):
        m = HessePoint.from_mu(m)
    m0, m1 = m.mu0, m.mu1
    den = m0 ** 3 * (m1 ** 3 - m0 ** 3) ** 3
    if den.is_zero():
        return INFINITY
    return m1 ** 3 * (m1 ** 3 + 8 * m0 ** 3) ** 3 / den


# -- the forgetful map and its fibres -------------------------------------------


def pair_of(m: HessePoint, b: ProjectivePoint) -> CubicLinePair:
    return CubicLinePair(hesse_cubic(m), TernaryForm.linear(*b))


def point_of(z: CubicLinePair) -> Tuple[HessePoint, ProjectivePoint]:
    return hesse_point_of(z.C), ProjectivePoint(z.L.line_coeffs())


def act_on_x(g: ProjTransform, m: HessePoint, b: ProjectivePoint):
    """Image of (m, b) in SQ x P(V) under g, via the action on pairs."""
    z = pair_of(m, b).act(g)
    return point_of(z)


def on_a_line(m: HessePoint, b) -> List[Tuple[int, int]]:
    """Indices (i, j) of the lines A_i^(j) through (m, b)."""
    out = []
    for i in range(3):
        for j in range(3):
            if _a_line_eqs(i, j, m, b):
                out.append((i, j))
    return out


def _a_line_eqs(i, j, m, b) -> bool:
    c = W2 ** j
    bi, bn, bnn = b[i], b[(i + 1) % 3], b[(i + 2) % 3]
    return (bn - bnn * c).is_zero() and (bnn * m.mu1 - bi * c * m.mu0).is_zero()


def on_triangle(m: HessePoint, b) -> bool:
    for a, forms in triangle_forms().items():
        if (m.mu0 - a * m.mu1).is_zero():
            if any(_lin(f, b).is_zero() for f in forms):
                return True
    return False


def _lin(f, b):
    return f[0] * b[0] + f[1] * b[1] + f[2] * b[2]


def fiber(z: CubicLinePair, check: bool = True):
    """The 216 points of SQ x P(V) over z, each with the witness mapping it to z.

    Returns a list of (m', b', witness) with witness . pair_of(m', b') = z
    up to scalars.
    """
    m, b = point_of(z)
    if on_triangle(m, b) or on_a_line(m, b):
        raise DegenerateFiber("pair lies on a base locus")
    out = []
    seen = set()
    for g in g216():
        mp, bp = act_on_x(g, m, b)
        key = (mp, bp)
        if key in seen:
            raise DegenerateFiber("fibre has repeated points")
        seen.add(key)
        wit = g.inverse()
        if check and not pair_of(mp, bp).act(wit).equivalent(z):
            raise AssertionError("fibre witness failed")
        out.append((mp, bp, wit))
    return out


def fiber_formula(m: HessePoint, b) -> List[Tuple[HessePoint, ProjectivePoint]]:
    """The listed closed form: orbit points of m times (b_i : d b_j : d^2 b_k)."""
    from itertools import permutations
    lines = []
    for p in permutations(range(3)):
        for d in CUBE_ROOTS:
            lines.append(ProjectivePoint([b[p[0]], d * b[p[1]], d * d * b[p[2]]]))
    m0, m1 = m.mu0, m.mu1
    mus = [HessePoint(m0, a * m1) for a in CUBE_ROOTS]
    mus += [HessePoint(be * m1 - m0, ga * (be * m1 + 2 * m0))
            for be in CUBE_ROOTS for ga in CUBE_ROOTS]
    return [(mm, l) for mm in mus for l in lines]


# -- base loci ------------------------------------------------------------------

A_VALUES = (ZERO, ONE, W, W2)


def a_label(a: Scalar) -> str:
    return {ZERO: "0", ONE: "1", W: "w", W2: "w^2"}[a]


@lru_cache(maxsize=None)
def triangle_forms() -> Dict[Scalar, Tuple[Tuple[Scalar, Scalar, Scalar], ...]]:
    """Coefficient vectors of b_i^(a) in (b0, b1, b2)."""
    out = {}
    for a in A_VALUES:
        if a.is_zero():
            out[a] = ((ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE))
        else:
            out[a] = tuple((ONE, W ** i, a * W ** (2 * i)) for i in range(3))
    return out


def vertex(a: Scalar, i: int) -> Tuple[HessePoint, ProjectivePoint]:
    """O^(a, i) = V(mu0 - a mu1, b^(a)_[i+1], b^(a)_[i+2])."""
    from .geometry import cross
    f = triangle_forms()[a]
    b = ProjectivePoint(cross(list(f[(i + 1) % 3]), list(f[(i + 2) % 3])))
    return HessePoint(a, ONE), b


class BaseLocusDescription:
    def __init__(self):
        self.triangles = {a_label(a): triangle_forms()[a] for a in A_VALUES}
        self.vertices = {(a_label(a), i): vertex(a, i) for a in A_VALUES for i in range(3)}
        self.lines = {(i, j): "b_%d = b_%d w^%d, b_%d mu1 = b_%d w^%d mu0"
                      % ((i + 1) % 3, (i + 2) % 3, 2 * j, (i + 2) % 3, i, 2 * j)
                      for i in range(3) for j in range(3)}

    def to_json(self):
        return {
            "triangles": {k: [[str(c) for c in f] for f in v] for k, v in self.triangles.items()},
            "vertices": {"O(%s,%d)" % k: {"mu": v[0].to_json(), "b": v[1].to_json()}
                         for k, v in self.vertices.items()},
            "lines": {"A_%d^(%d)" % k: v for k, v in self.lines.items()},
        }


def base_loci() -> BaseLocusDescription:
    return BaseLocusDescription()


def a_line_point(i: int, j: int, m: HessePoint) -> ProjectivePoint:
    """The b-coordinate of A_i^(j) over m: b_i = mu1, b_[i+1] = w^j mu0, b_[i+2] = w^2j mu0."""
    b = [None] * 3
    b[i] = m.mu1
    b[(i + 1) % 3] = W ** j * m.mu0
    b[(i + 2) % 3] = W ** (2 * j) * m.mu0
    return ProjectivePoint(b)


def stated_vertices_on_line(i: int, j: int):
    """Vertex labels the incidence statement assigns to A_i^(j)."""
    labs = [("0", i)]
    for k in range(3):
        labs.append((a_label(W ** k), (2 * j + (2 - i) * k) % 3))
    return labs


def stated_lines_through_vertex(a_lab: str, i: int):
    if a_lab == "0":
        return [(i, j) for j in range(3)]
    k = {"1": 0, "w": 1, "w^2": 2}[a_lab]
    return [(j, (2 * k * (j + 1) + 2 * i) % 3) for j in range(3)]


class IncidenceTable:
    def __init__(self, on_line, through_vertex):
        self.on_line = on_line                  # (i, j) -> sorted vertex labels
        self.through_vertex = through_vertex    # vertex label -> sorted (i, j)

    def mismatches(self):
        bad = []
        for (i, j), labs in self.on_line.items():
            if sorted(labs) != sorted(stated_vertices_on_line(i, j)):
                bad.append(("line", (i, j), labs))
        for lab, lines in self.through_vertex.items():
            if sorted(lines) != sorted(stated_lines_through_vertex(*lab)):
                bad.append(("vertex", lab, lines))
        return bad

    def to_json(self):
        return {"lines": {"A_%d^(%d)" % k: ["O(%s,%d)" % v for v in sorted(vs)]
                          for k, vs in self.on_line.items()},
                "vertices": {"O(%s,%d)" % k: ["A_%d^(%d)" % l for l in sorted(ls)]
                             for k, ls in self.through_vertex.items()},
                "mismatches": [list(map(str, x)) for x in self.mismatches()]}


def incidence_table() -> IncidenceTable:
    verts = base_loci().vertices
    on_line = {}
    through = {lab: [] for lab in verts}
    for i in range(3):
        for j in range(3):
            labs = []
            for lab, (m, b) in verts.items():
                if _a_line_eqs(i, j, m, b):
                    labs.append(lab)
                    through[lab].append((i, j))
            on_line[(i, j)] = sorted(labs)
    return IncidenceTable(on_line, {k: sorted(v) for k, v in through.items()})


def three_tangent(m: HessePoint, b) -> bool:
    z = pair_of(m, b)
    return contact_type(z.C, z.L).kind == "ThreeTangent"
