import random

import pytest
from hypothesis import given, settings, strategies as st

from cubicline import atlas as A
from cubicline.forms import CubicLinePair, TernaryForm
from cubicline.geometry import classify_cubic, contact_type
from cubicline.hesse import A_VALUES, INFINITY, j_invariant
from cubicline.scalars import BASE, ZETA
from cubicline.stability import classify

seeds = st.integers(min_value=0, max_value=10 ** 6)
P = CubicLinePair.parse


def phi(j, coords, root=None, tower=None):
    return A.ChartPoint("phi", j, coords, root, tower)


def psi(r, coords, root=None):
    return A.ChartPoint("psi", r, coords, root)


# -- chart points -----------------------------------------------------------------


def test_u_weight_examples():
    assert A.chart_u_weight(1, (5, 1, 2)) == 5
    assert A.chart_u_weight(4, (2, 3, 5)) == 150


def test_unit_denominator_excluded():
    with pytest.raises(A.ChartDomainError):
        phi(3, (1, 1, 1), root=1)


def test_radical_slot_is_filled_from_root():
    p = phi(2, (3, None, 5), root=2)
    assert p.coords[1] == 4
    with pytest.raises(A.ChartDomainError):
        phi(2, (3, 5, 5), root=2)
    with pytest.raises(A.RadicalRequired):
        phi(2, (3, None, 5))


def test_radical_required_for_output():
    with pytest.raises(A.RadicalRequired):
        A.phi_tilde(3, phi(3, (2, 3, 5)))
    with pytest.raises(A.RadicalRequired):
        A.psi_hat(1, psi(1, (2, 3, 5)))


# -- phi charts ---------------------------------------------------------------------


def test_phi_listed_outputs():
    assert A.phi_tilde(4, phi(4, (0, 0, 0))).pair.equivalent(P("x0*x1*x2", "x0+x1+x2"))
    out = A.phi_tilde(4, phi(4, (3, 2, 0))).pair
    cc = classify_cubic(out.C)
    assert cc.kind == "ConicPlusChord"
    comps = sorted(cc.components, key=lambda f: f.degree)
    assert comps[0].proportional(TernaryForm.parse("x1"))
    assert comps[1].proportional(TernaryForm.parse("2*x1^2 - 3*x0*x2"))
    out = A.phi_tilde(1, phi(1, (2, 3, 5))).pair
    assert out.equivalent(P("8*x0^3 + x1^3 + x2^3 - 3*x0*x1*x2", "x0 + 3*x1 + 5*x2"))


@pytest.mark.parametrize("j", range(1, 8))
def test_phi_extension_small(j):
    rep = A.verify_phi_extension(j, samples=15, rng=random.Random(j))
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("a", A_VALUES, ids=["0", "1", "w", "w2"])
@pytest.mark.parametrize("i", range(3))
def test_phi_extension_every_tower(a, i):
    for j in (1, 4, 6):
        rep = A.verify_phi_extension(j, samples=4, rng=random.Random(j + 7 * i), tower=(a, i))
        assert rep.passed, rep.failures()


def test_tower_transform_matches_substitution():
    # two routes to the base pair over every (a, i)
    rng = random.Random(5)
    for a in A_VALUES:
        for i in range(3):
            for _ in range(3):
                p = A.random_phi_point(1, rng, tower=(a, i))
                u, s1, s2 = p.base()
                base = A.phi_on_base(BASE.zero(), 0, u, s1, s2)
                direct = A.phi_on_base(a, i, u, s1, s2)
                assert base.act(A.tower_transform(a, i)).equivalent(direct)


@pytest.mark.parametrize("pair", [(1, 2), (1, 7), (4, 5), (2, 3), (6, 7)])
def test_transitions(pair):
    rep = A.verify_phi_transition(*pair, samples=8, rng=random.Random(sum(pair)))
    assert rep.passed, rep.failures()


def test_stated_transition_matrix_on_exceptional_slice():
    rep = A.verify_phi_transition(1, 2, samples=10, rng=random.Random(11))
    sliced = [r for r in rep.records if r.notes.get("zero_slots") == [0]]
    assert sliced
    for r in sliced:
        assert r.passed
        assert r.notes["stated_is_inverse_of_witness"]
        assert r.notes["stated_by_substitution"]


def test_transition_exponents_are_consistent():
    for j in range(1, 8):
        for jp in range(1, 8):
            T = A.phi_transition_exponents(j, jp)
            back = A.phi_transition_exponents(jp, j)
            prod = [[sum(T[a][k] * back[k][b] for k in range(3)) for b in range(3)]
                    for a in range(3)]
            assert prod == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_phi_strata_examples():
    assert A.exceptional_stratum_class(4, phi(4, (3, 0, 2))).label == "Triangle"
    assert A.exceptional_stratum_class(1, phi(1, (0, 3, 2))).label == "IrreducibleNodal"
    assert A.exceptional_stratum_class(1, phi(1, (2, 3, 5))).label == "Smooth"


@pytest.mark.parametrize("j", range(1, 8))
def test_phi_strata_grid(j):
    rep = A.verify_phi_strata(j)
    assert rep.passed, rep.failures()


def _check_strata_against_rays(strata, ray, charts, slots):
    ray_sets = {name: {ray(c, l) for c, l in members} for name, members in strata.items()}
    names = sorted(ray_sets)
    for a in names:
        for b in names:
            if a < b:
                assert not ray_sets[a] & ray_sets[b]
    for name, rays in ray_sets.items():
        # every chart divisor along one of the stratum's rays is listed
        want = {(c, l) for c in charts for l in slots if ray(c, l) in rays}
        assert want == set(strata[name]), name
    return ray_sets


def test_listed_phi_strata_agree_with_rays():
    rays = _check_strata_against_rays(A.PHI_STRATA, A.phi_ray, range(1, 8), range(3))
    swap = lambda v: (v[0], v[2], v[1])
    for name, rs in rays.items():
        assert {swap(v) for v in rs} == rs, name
    # the divisors not listed are the strict transforms of s1 = 0 and s2 = 0
    listed = set().union(*rays.values())
    other = {A.phi_ray(j, l) for j in range(1, 8) for l in range(3)} - listed
    assert other == {(0, 1, 0), (0, 0, 1)}


def test_listed_psi_strata_agree_with_rays():
    _check_strata_against_rays(A.PSI_STRATA, A.psi_ray, range(1, 5), (1, 2))


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(1, 7))
def test_root_flip(seed, j):
    rng = random.Random(seed)
    p = A.random_phi_point(j, rng)
    assert A.root_flip_holds(A.phi_tilde(j, p))


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(1, 7))
def test_phi_outputs_lie_in_bp(seed, j):
    rng = random.Random(seed)
    slots = [rng.randrange(3)] if rng.random() < 0.5 else []
    try:
        p = A.random_phi_point(j, rng, exceptional=slots)
    except A.ChartDomainError:
        return
    out = A.phi_tilde(j, p)
    assert A.in_bp(out.pair)
    assert classify_cubic(out.pair.C).kind == A.exceptional_stratum_class(j, p).label


# -- psi charts ---------------------------------------------------------------------


def test_psi_listed_outputs():
    out = A.psi_hat(3, psi(3, (2, None, 0), root=3)).pair
    cc = classify_cubic(out.C)
    assert cc.kind == "IrreducibleCuspidal"
    assert list(cc.singular[0].point) == [1, 0, 0]
    assert not out.L.evaluate((1, 0, 0)).is_zero()
    out = A.psi_hat(3, psi(3, (0, None, 3), root=2)).pair
    assert classify_cubic(out.C).kind == "IrreducibleNodal"
    out = A.psi_hat(3, psi(3, (2, None, 3), root=2)).pair
    assert classify_cubic(out.C).kind == "Smooth"
    assert contact_type(out.C, out.L).kind != "ThreeTangent"


def test_hat_e_examples():
    assert A.hatE_stratum(1, psi(1, (2, None, 5), root=0))
    assert A.hatE_stratum(2, psi(2, (2, 0, None), root=2))
    assert not A.hatE_stratum(4, psi(4, (2, 3, None), root=2))


@pytest.mark.parametrize("r", range(1, 5))
def test_psi_extension_small(r):
    rep = A.verify_psi_extension(r, samples=15, rng=random.Random(r))
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("r", range(1, 5))
def test_psi_strata_grid(r):
    rep = A.verify_psi_strata(r)
    assert rep.passed, rep.failures()


def test_only_base_psi_tower():
    with pytest.raises(A.ChartDomainError):
        A.ChartPoint("psi", 1, (2, 3, 8), root=2, tower=(ZETA, 0, 0))


# -- graph closure and the 3-tangent stratum ---------------------------------------------


def test_graph_closure_example():
    gc = A.graph_closure_family(1, 0, 0, 1)
    assert gc.first.equivalent(P("x0*x2^2 - x1^3", "x0 - x1"))
    assert classify(gc.first, certify=False).row == 10
    assert gc.second.equivalent(P("x0*x2^2 - x1^3 - x0^3", "x0"))
    assert classify_cubic(gc.second.C).kind == "Smooth"
    assert contact_type(gc.second.C, gc.second.L).kind == "ThreeTangent"


def test_graph_closure_second_example_is_smooth():
    # B2 = 0, B1 = 1: x0 x2^2 = x1^3 + x0^2 x1, and x^3 + x is squarefree
    gc = A.graph_closure_family(1, 1, 1, 0)
    assert classify_cubic(gc.second.C).kind == "Smooth"
    assert contact_type(gc.second.C, gc.second.L).kind == "ThreeTangent"


def test_graph_closure_nodal_second_limit():
    # 4 B1^3 + 27 B2^2 = 0 makes the Weierstrass cubic nodal
    gc = A.graph_closure_family(1, 1, -3, 2)
    assert classify_cubic(gc.second.C).kind == "IrreducibleNodal"
    assert contact_type(gc.second.C, gc.second.L).kind == "ThreeTangent"


def test_graph_closure_first_limit_on_the_discriminant():
    # 4 b1^3 = 27 b2^2 makes the line tangent to the cusp model
    gc = A.graph_closure_family(3, 2, 1, 0)
    assert classify(gc.first, certify=False).row == 11


def test_wt_examples():
    assert A.wt_j_match(0).j == 0
    m = A.wt_j_match(3, witness=True)
    assert m.witness is not None and A.z_of(3).act(m.witness).equivalent(A.z_rescaled(BASE.one() * 5 / 2))
    lim = A.mu_to_one_family().limit_at_zero()
    assert lim.equivalent(A.nodal_tangent_pair())
    assert classify_cubic(lim.C).kind == "IrreducibleNodal"
    assert contact_type(lim.C, lim.L).kind == "ThreeTangent"
    assert A.wt_j_match(1).j == INFINITY


def test_wt_identification_preserves_j():
    for mu in (2, 3, -5, 7):
        nu = (BASE.one() * mu + 2) / (BASE.one() * mu - 1)
        assert j_invariant(mu) == j_invariant(nu)


def test_wt_identification_samples():
    rep = A.verify_wt_identification(samples=5, rng=random.Random(2))
    assert rep.passed
