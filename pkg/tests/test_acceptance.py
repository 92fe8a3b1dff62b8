"""Fourteen end-to-end acceptance checks, one test per criterion.

Each test records PASS or FAIL with a short detail line; the lines are
printed in the terminal summary (see conftest.py).
"""
import random
from fractions import Fraction

import pytest

from cubicline import atlas as A
from cubicline import hesse as H
from cubicline import stability as S
from cubicline.forms import ProjectivePoint, random_scalar, random_transform
from cubicline.geometry import contact_type
from cubicline.scalars import BASE, Scalar

import conftest
from catalog import ROW_PAIRS, UNSTABLE_PAIRS, pair

ONE = BASE.one()


def record(n, ok, detail=""):
    conftest.ACCEPTANCE[n] = (bool(ok), detail)
    assert ok, detail


def test_01_weight_order_exhaustive():
    count, bad = 0, []
    for r0 in range(1, 51):
        for r2 in range(-2 * r0, 1):
            r1 = -r0 - r2
            if not r0 >= r1 >= r2:
                continue
            count += 1
            if not S.check_weight_order((r0, r1, r2)):
                bad.append((r0, r1, r2))
    record(1, not bad and count > 0, "%d weights, %d failures" % (count, len(bad)))


EXPECTED_MU = {"i": -1, "ii": -1, "iii": -1, "iv": -1, "v": -2}


def _witness_mu(reason):
    z = pair(UNSTABLE_PAIRS[reason])
    g, lam = S.destabilizing_witness(z, reason=reason)
    return S.mu(z.act(g), lam)


@pytest.mark.xfail(strict=True, reason="reason (ii) attains -2, not -1: a line inside the "
                   "cubic kills every coefficient the -1 bound uses")
def test_02_unstable_catalog():
    got = {r: _witness_mu(r) for r in sorted(EXPECTED_MU)}
    want = [EXPECTED_MU[r] for r in ("i", "ii", "iii", "iv", "v")]
    have = [got[r] for r in ("i", "ii", "iii", "iv", "v")]
    record(2, have == want, "mu %s, expected %s" % (have, want))


def test_02_unstable_catalog_witnesses_destabilize():
    # the part of the catalog check that does hold: every witness is negative
    for r in EXPECTED_MU:
        assert _witness_mu(r) < 0


def _transported_worst(k, rng, n=50):
    out = []
    for _ in range(n):
        z = S.representative(k).act(random_transform(rng))
        g, zk = S.normal_form(z)
        out.append((zk == S.representative(k), S.worst_one_ps(z.act(g))))
    return out


def _is_zero_at_center(w):
    return w.value == 0 and tuple(w.lam) == (1, 0, -1)


@pytest.mark.xfail(strict=True, reason="z6 in its displayed frame has worst value 1/3; "
                   "its mu = 0 weight lives in the frame with x0 and x2 swapped")
def test_03_strict_semistability_after_transport():
    rng = random.Random(3)
    bad = {}
    for k in (5, 6, 7, 11):
        res = _transported_worst(k, rng)
        bad[k] = sum(1 for same, w in res if not (same and _is_zero_at_center(w)))
    record(3, not any(bad.values()), "failing translates per z_k %s" % bad)


@pytest.mark.parametrize("k", [5, 7, 11])
def test_03_holds_for_z5_z7_z11(k):
    res = _transported_worst(k, random.Random(30 + k))
    assert all(same and _is_zero_at_center(w) for same, w in res)


def test_03_z6_is_zero_in_its_certificate_frame():
    z6 = S.representative(6)
    assert S.worst_one_ps(z6).value == Fraction(1, 3)
    cert = S.classify(z6).certificate
    w = S.worst_one_ps(z6.act(cert.g))
    assert _is_zero_at_center(w) and cert.verify(z6) == 0


def test_04_identification_limits():
    z7 = S.representative(7)
    names = [name for name, fam, _ in S.identification_families()
             if fam.limit_at_zero().equivalent(z7)]
    record(4, len(names) == 3, "%d of 3 families degenerate to z7" % len(names))


def test_05_table_coverage():
    rng = random.Random(5)
    bad = []
    for row, forms in sorted(ROW_PAIRS.items()):
        z = pair(forms)
        if S.classify(z).row != row:
            bad.append((row, "base"))
        for _ in range(100):
            zt = z.act(random_transform(rng, cyclotomic=rng.random() < 0.3))
            if S.classify(zt, certify=False).row != row:
                bad.append((row, str(zt)))
    record(5, not bad, "11 rows x 100 translates, %d failures" % len(bad))


def test_06_wcusp():
    rng = random.Random(6)
    bad, overlap = [], 0
    for n in range(100):
        if n % 10 == 0:
            s = random_scalar(rng, 4, nonzero=True)
            b1, b2 = 3 * s * s, 2 * s ** 3          # on the discriminant
        else:
            b1, b2 = random_scalar(rng, 6), random_scalar(rng, 6)
            if b1.is_zero() and b2.is_zero():
                continue
        z = S.wcusp_pair(b1, b2)
        row = S.classify(z, certify=False).row
        disc = (4 * b1 ** 3 - 27 * b2 * b2).is_zero()
        if (row == 10) != (not disc):
            bad.append(("row", b1, b2))
        w = S.wcusp_coordinate(z.act(random_transform(rng)))
        if w != S.WCuspCoord(b1, b2):
            bad.append(("coord", b1, b2))
        if w.b_cubed is not None and w.c_squared is not None:
            overlap += 1
            if w.b_cubed * w.c_squared != 1:
                bad.append(("chart", b1, b2))
    record(6, not bad, "%d overlap points, %d failures" % (overlap, len(bad)))


def test_07_hesse_group():
    G, K = H.g216(), H.level_subgroup()
    orbit, stab = H.orbit_and_stabilizer(H.HessePoint(ONE, 5 * ONE))
    ok = G.order == 216 and K.order == 18 and len(orbit) == 12 and len(orbit) * stab == 216
    record(7, ok, "|G|=%d |K|=%d orbit=%d stab=%d" % (G.order, K.order, len(orbit), stab))


def _generic_pairs(rng, n):
    # smooth member with a 12-point orbit, b off the triangle and the A-lines
    out = []
    while len(out) < n:
        m = H.HessePoint(ONE, random_scalar(rng, 9, cyclotomic=True))
        if H.is_singular_member(m) or len(H.orbit_formula(m)) != 12:
            continue
        coords = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(3)]
        if len(set(coords)) < 3 or 0 in coords:
            continue
        b = ProjectivePoint([ONE * c for c in coords])
        if H.on_triangle(m, b) or H.on_a_line(m, b):
            continue
        out.append(H.pair_of(m, b))
    return out


def test_08_fiber_degree():
    sizes = []
    for z in _generic_pairs(random.Random(8), 10):
        pts = H.fiber(z, check=False)
        ok = all(H.pair_of(m, b).act(g).equivalent(z) for m, b, g in pts)
        sizes.append(len({(m, b) for m, b, _ in pts}) if ok else -1)
    record(8, sizes == [216] * 10, "distinct fibre sizes %s" % sizes)


def test_09_incidence():
    t = H.incidence_table()
    ok = (t.mismatches() == [] and len(t.on_line) == 9
          and all(len(v) == 4 for v in t.on_line.values())
          and len(t.through_vertex) == 12
          and all(len(v) == 3 for v in t.through_vertex.values()))
    record(9, ok, "%d mismatches" % len(t.mismatches()))


def test_10_atlas_phi():
    fails = []
    for j in range(1, 8):
        rep = A.verify_phi_extension(j, samples=100, rng=random.Random(100 + j))
        if not rep.passed:
            fails.append(("extension", j))
        if not A.verify_phi_strata(j).passed:
            fails.append(("strata", j))
    rep = A.verify_phi_transition(1, 2, samples=20, rng=random.Random(12))
    sliced = [r for r in rep.records if r.notes.get("zero_slots") == [0]]
    if not (rep.passed and sliced and all(r.notes["stated_by_substitution"] for r in sliced)):
        fails.append(("transition", 1, 2))
    record(10, not fails, "failures %s" % fails)


def test_11_atlas_psi():
    fails = []
    for r in range(1, 5):
        rep = A.verify_psi_extension(r, samples=100, rng=random.Random(200 + r))
        if not rep.passed or not any(rec.notes["exceptional"] for rec in rep.records):
            fails.append(("extension", r))
        if not A.verify_psi_strata(r).passed:
            fails.append(("strata", r))
    record(11, not fails, "failures %s" % fails)


def test_12_graph_closure():
    rng = random.Random(12)
    bad, n = [], 0
    while n < 20:
        b1, b2, B1, B2 = (random_scalar(rng, 6) for _ in range(4))
        if (b1.is_zero() and b2.is_zero()) or (B1.is_zero() and B2.is_zero()):
            continue
        n += 1
        gc = A.graph_closure_family(b1, b2, B1, B2)
        first_ok = (gc.first.equivalent(A.cusp_pair(b1, b2))
                    and S.classify(gc.first, certify=False).row == 10)
        second_ok = (gc.second.equivalent(A.weierstrass_pair(B1, B2))
                     and contact_type(gc.second.C, gc.second.L).kind == "ThreeTangent")
        if not (first_ok and second_ok):
            bad.append((b1, b2, B1, B2))
    record(12, not bad, "20 quadruples, %d failures" % len(bad))


def test_13_j_invariant():
    rng = random.Random(13)
    bad, n = [], 0
    while n < 25:
        mu = Scalar(BASE, (Fraction(rng.randint(-20, 20), rng.randint(1, 5)),
                           Fraction(rng.randint(-20, 20), rng.randint(1, 5))))
        m = H.HessePoint.from_mu(mu)
        if H.is_singular_member(m):
            continue
        n += 1
        j = H.j_invariant(m)
        orbit = H.orbit_formula(m)
        if len(orbit) != 12 or any(H.j_invariant(p) != j for p in orbit):
            bad.append(mu)
    ok = not bad and H.j_invariant(0) == 0
    record(13, ok, "25 orbits, %d failures, j(0) = %s" % (len(bad), H.j_invariant(0)))


STABILIZER_CASES = [
    (("x0*x1*x2", "x0+x1+x2"), 6, True),
    (("x0^3+x1^3-3*x0*x1*x2", "x0+x1+x2"), 6, False),
    (("x2*(x2^2+x0*x1)", "x0+x1+x2"), 2, True),
    (("x2*(x2^2+x0*x1)", "x0+x1"), 4, True),
]


def test_14_stabilizers():
    orders, ok = [], True
    for forms, want, whole_pair in STABILIZER_CASES:
        z = pair(forms)
        rep = S.stabilizer_probe(z)
        orders.append(rep.order)
        fixes_c = all(z.act(g).C.proportional(z.C) for g in rep.group)
        fixes_l = all(z.act(g).L.proportional(z.L) for g in rep.group)
        ok = ok and rep.order == want and fixes_c and (fixes_l or not whole_pair)
    record(14, ok and orders == [6, 6, 2, 4], "orders %s" % orders)
