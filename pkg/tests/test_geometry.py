import random

import pytest
from hypothesis import given, settings, strategies as st

from cubicline.forms import TernaryForm, act, random_transform
from cubicline.geometry import (IrrationalSingularity, PositiveDimensionalSingularLocus,
                                classify_cubic, contact_type, singular_points)

import oracle
from catalog import ROW_CURVES, ROW_PAIRS, UNSTABLE_PAIRS

T = TernaryForm.parse
seeds = st.integers(min_value=0, max_value=10 ** 6)

CURVES = {
    "Smooth": "x0^3+x1^3+x2^3",
    "IrreducibleNodal": "x0*x1*x2+x1^3+x2^3",
    "IrreducibleCuspidal": "x0^2*x2+x1^3",
    "ConicPlusChord": "x2*(x0*x1-x2^2)",
    "ConicPlusTangentLine": "x0*(x0*x2+x1^2)",
    "Triangle": "x0*x1*x2",
    "ThreeConcurrentLines": "x1^3+x2^3",
    "LinePlusDoubleLine": "x0*x2^2",
    "TripleLine": "x0^3",
}


def test_smooth_has_no_singular_points():
    assert singular_points(T("x0^3+x1^3+x2^3")) == []


def test_conic_plus_tangent_line_singular_point():
    (p,) = singular_points(T("x0^2*x2 + x0*x1^2"))
    assert list(p.point) == [0, 0, 1]
    assert p.multiplicity == 2 and p.cone == "double_line"
    assert p.tangent_line.proportional(T("x0"))
    assert p.tangent_divides == [True]


def test_nonreduced_locus():
    loc = singular_points(T("x2^2*(x0 + 2*x1 - x2)"))
    assert isinstance(loc, PositiveDimensionalSingularLocus)
    assert loc.contains((1, 0, 0))


def test_kinds():
    assert classify_cubic(T("x0*x1*x2")).kind == "Triangle"
    assert sorted(map(str, classify_cubic(T("x0*x1*x2")).components)) == ["x0", "x1", "x2"]
    assert classify_cubic(T("x0^2*x2 + x1^3")).kind == "IrreducibleCuspidal"
    cc = classify_cubic(T("x0*(x0*x2+x1^2)"))
    assert cc.kind == "ConicPlusTangentLine"
    assert sorted(map(str, cc.components)) == sorted(["x0", "x0*x2 + x1^2"])


@pytest.mark.parametrize("kind", sorted(CURVES))
def test_kind_matches_sympy_oracle(kind):
    assert oracle.curve_kind(CURVES[kind]) == kind
    assert classify_cubic(T(CURVES[kind])).kind == kind


def test_contact_examples():
    ct = contact_type(T("x0*(x0*x2+x1^2)"), T("x2"))
    assert ct.kind == "SimpleTangent"
    pts = {tuple(map(str, p)): m for p, m in ct.points}
    assert pts == {("1", "0", "0"): 2, ("0", "1", "0"): 1}
    assert ct.smooth_at_tangency
    ct = contact_type(T("x0^3+x1^3+x2^3-6*x0*x1*x2"), T("2*x0+x1+x2"))
    assert ct.kind == "ThreeTangent"
    assert [list(map(str, p)) for p, _ in ct.points] == [["0", "1", "-1"]]
    assert contact_type(T("x0*(x1^2 + x0*x2)"), T("x0")).kind == "Contained"


def test_irrational_points_use_an_extension():
    cc = classify_cubic(T("x2*(x0^2 - 2*x1^2 - x2^2)"))
    assert cc.kind == "ConicPlusChord" and cc.extension_used
    with pytest.raises(IrrationalSingularity):
        singular_points(T("x2*(x0^2 - 2*x1^2 - x2^2)"), allow_extension=False)


def test_cubically_conjugate_vertices_fail():
    # norm form of Q(2^(1/3)): three lines meeting in conjugate points
    with pytest.raises(IrrationalSingularity):
        classify_cubic(T("x0^3+2*x1^3+4*x2^3-6*x0*x1*x2"))


@pytest.mark.parametrize("row", sorted(ROW_PAIRS))
def test_catalog_curve_kinds(row):
    c, _ = ROW_PAIRS[row]
    assert classify_cubic(T(c)).kind == ROW_CURVES[row] == oracle.curve_kind(c)


@settings(max_examples=20, deadline=None)
@given(seeds, st.sampled_from(sorted(CURVES)))
def test_kind_is_projectively_invariant(seed, kind):
    g = random_transform(random.Random(seed))
    F = act(g, T(CURVES[kind]))
    assert classify_cubic(F).kind == kind


@settings(max_examples=10, deadline=None)
@given(seeds, st.sampled_from(["IrreducibleNodal", "IrreducibleCuspidal", "ConicPlusChord",
                               "ConicPlusTangentLine", "Triangle", "ThreeConcurrentLines"]))
def test_singular_points_match_sympy(seed, kind):
    g = random_transform(random.Random(seed), bound=2)
    F = act(g, T(CURVES[kind]))
    ours = [[complex(oracle.sp.N(oracle.numeric(c))) for c in sp.point]
            for sp in singular_points(F)]
    theirs = oracle.singular_points(F)
    assert len(ours) == len(theirs)
    # compare as projective points after scaling by the last nonzero coordinate
    def scaled(p):
        piv = next(c for c in reversed(p) if abs(c) > 1e-12)
        return tuple(round((c / piv).real, 8) + 1j * round((c / piv).imag, 8) for c in p)
    want = sorted((scaled([complex(oracle.sp.N(c)) for c in p]) for p in theirs), key=str)
    got = sorted((scaled(p) for p in ours), key=str)
    assert got == want


@pytest.mark.parametrize("reason", sorted(UNSTABLE_PAIRS))
def test_unstable_catalog_contacts(reason):
    c, l = UNSTABLE_PAIRS[reason]
    kind = contact_type(T(c), T(l)).kind
    want = {"i": "ThreeTangent", "ii": "Contained"}.get(reason)
    if want:
        assert kind == want
    else:
        assert kind != "Contained"
