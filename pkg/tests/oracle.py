"""Independent reference computations built on sympy and numpy.

Nothing here imports the arithmetic of the package under test: forms cross
over as strings and are re-parsed by sympy, so agreement means two separate
code paths reached the same answer.
"""
import numpy as np
import sympy as sp

x0, x1, x2, w, r = sp.symbols("x0 x1 x2 w r")
X = (x0, x1, x2)
W_VALUE = (-1 + sp.sqrt(3) * sp.I) / 2


def expr(form):
    return sp.sympify(str(form).replace("^", "**"), locals={"w": w, "r": r})


def _reduce_w(c):
    return sp.rem(sp.expand(c), w ** 2 + w + 1, w)


def support(form):
    """Exponent vectors with a nonzero coefficient over Q(w)."""
    poly = sp.Poly(sp.expand(expr(form)), *X)
    return [m for m, c in poly.terms() if _reduce_w(c) != 0]


def mu(C, L, lam):
    """max over the support of (3-i-j) r0 + i r1 + j r2 + r_k."""
    r0, r1, r2 = lam
    best = None
    for (e0, i, j) in support(C):
        for (l0, l1, l2) in support(L):
            k = (l0, l1, l2).index(1)
            val = (3 - i - j) * r0 + i * r1 + j * r2 + lam[k]
            best = val if best is None else max(best, val)
    return best


def numeric(form):
    return sp.expand(expr(form).subs(w, W_VALUE))


def singular_points(form):
    """Singular points via sympy's polynomial solver, chart by chart."""
    F = numeric(form)
    grads = [sp.diff(F, v) for v in X]
    pts = []
    charts = [((x2, 1),), ((x2, 0), (x1, 1)), ((x2, 0), (x1, 0), (x0, 1))]
    for fix in charts:
        eqs = [sp.expand(g.subs(fix)) for g in grads]
        free = [v for v in X if v not in dict(fix)]
        eqs = [e for e in eqs if e != 0]
        if not free:
            if not eqs:
                pts.append(tuple(dict(fix)[v] for v in X))
            continue
        sols = sp.solve(eqs, free, dict=True) if eqs else [{}]
        for s in sols:
            if any(v not in s for v in free):
                return None     # positive dimensional
            pt = dict(fix)
            pt.update(s)
            pts.append(tuple(sp.nsimplify(pt[v]) for v in X))
    return pts


def curve_kind(form):
    """Curve type from a factorization over Q(sqrt(-3)) and the singular points."""
    F = numeric(form)
    _, facs = sp.factor_list(F, *X, extension=sp.sqrt(-3))
    degs = sorted((sp.Poly(f, *X).total_degree(), m) for f, m in facs
                  if sp.Poly(f, *X).total_degree() > 0)
    if degs == [(1, 3)]:
        return "TripleLine"
    if degs == [(1, 1), (1, 2)]:
        return "LinePlusDoubleLine"
    sing = singular_points(form)
    if degs == [(1, 1), (1, 1), (1, 1)]:
        M = sp.Matrix([[sp.Poly(f, *X).coeff_monomial(v) for v in X] for f, _ in facs
                       if sp.Poly(f, *X).total_degree() == 1])
        return "ThreeConcurrentLines" if sp.simplify(M.det()) == 0 else "Triangle"
    if degs == [(1, 1), (2, 1)]:
        return "ConicPlusChord" if len(sing) == 2 else "ConicPlusTangentLine"
    assert degs == [(3, 1)], degs
    if not sing:
        return "Smooth"
    (p,) = sing
    return "IrreducibleNodal" if _cone_rank(F, p) == 2 else "IrreducibleCuspidal"


def _cone_rank(F, p):
    """Rank of the quadratic tangent cone at p (2 for a node, 1 for a cusp)."""
    H = sp.hessian(F, X).subs(dict(zip(X, p)))
    H = H.applyfunc(sp.nsimplify)
    return H.rank(simplify=True)


def j_hesse(mu_value):
    """j of x^3 + y^3 + z^3 + t x y z in the 1728 normalization, t = -3 mu,
    rescaled by 1/27 to the normalization used by the package."""
    t = -3 * sp.Rational(str(mu_value))
    j1728 = -t ** 3 * (t ** 3 - 216) ** 3 / (t ** 3 + 27) ** 3
    return j1728 / 27


def group_order(generators, bound=1000):
    """Order of the group generated in PGL(3, C), using floating point
    matrices normalized by their first nonzero entry."""
    def norm(m):
        flat = m.flatten()
        piv = flat[np.argmax(np.abs(flat) > 1e-9)]
        m = m / piv
        return m

    def key(m):
        return tuple(np.round(m.flatten(), 7).view(float).tolist())

    gens = [norm(np.array(g, dtype=complex)) for g in generators]
    seen = {key(np.eye(3, dtype=complex)): np.eye(3, dtype=complex)}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = norm(a @ g)
                k = key(b)
                if k not in seen:
                    seen[k] = b
                    nxt.append(b)
        frontier = nxt
        if len(seen) > bound:
            break
    return len(seen)


def complex_matrix(g):
    """ProjTransform -> complex rows, through the string form of its entries."""
    return [[complex(sp.N(sp.sympify(str(c).replace("^", "**"), locals={"w": w}).subs(w, W_VALUE)))
             for c in row] for row in g.m]
