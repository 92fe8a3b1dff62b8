import random

import pytest
from hypothesis import given, settings, strategies as st

from cubicline.forms import (BinaryForm, CubicLinePair, FormError, ParamFamily, ProjTransform,
                             TernaryForm, act, divide_by_linear, divides, line_parametrization,
                             multiplicity_pattern, random_transform, restrict_to_line)
from cubicline.scalars import ZETA
from cubicline import stability

import oracle

seeds = st.integers(min_value=0, max_value=10 ** 6)


def T(s):
    return TernaryForm.parse(s)


def test_identity_action():
    F = T("x0^3 + 2*x0*x1*x2 - x2^3")
    assert act(ProjTransform.identity(), F) == F


def test_diagonal_normalizes_line():
    L = T("2*x0 + 3*x1 + 5*x2")
    assert act(ProjTransform.diag(2, 3, 5), L).proportional(T("x0 + x1 + x2"))


def test_swap():
    assert act(ProjTransform.perm([2, 1, 0]), T("x0^3")) == T("x2^3")


def test_restriction_double_and_simple():
    b = restrict_to_line(T("x0^2*x2 + x0*x1^2"), T("x2"))
    assert b.proportional(BinaryForm([0, 0, 1, 0]))       # s t^2
    p = multiplicity_pattern(b)
    assert p.kind == (2, 1)


def test_restriction_contained():
    b = restrict_to_line(T("x0*(x1^2 + x0*x2)"), T("x0"))
    assert b.is_zero()
    assert multiplicity_pattern(b).kind == "zero"


def test_restriction_hesse_member():
    # mu = 2: the restriction is (1 - 8) s^3 up to the parameter change
    F = T("x0^3 + x1^3 + x2^3 - 6*x0*x1*x2")
    b = restrict_to_line(F, T("2*x0 + x1 + x2"))
    assert multiplicity_pattern(b).kind == (3,)


def test_patterns():
    assert multiplicity_pattern(BinaryForm([0, 1, 1, 0])).kind == (1, 1, 1)   # s t (s + t)
    p = multiplicity_pattern(BinaryForm([0, 0, 1, 0]))
    assert p.kind == (2, 1)
    assert p.root[0] == 1 and p.root[1] == 0
    p = multiplicity_pattern(BinaryForm([-7, 0, 0, 0]))   # -7 s^3
    assert p.kind == (3,)
    assert p.root[0] == 0 and p.root[1] == 1


def test_parse_rejects_wrong_degree():
    with pytest.raises(FormError):
        CubicLinePair.parse("x0^2", "x0")
    with pytest.raises(FormError):
        CubicLinePair.parse("x0^3", "x0^2")


def test_divide_by_linear():
    F = T("x0*(x0*x2 + x1^2)")
    assert divides(T("x0"), F)
    assert divide_by_linear(F, T("x0")) == T("x0*x2 + x1^2")
    assert not divides(T("x1"), F)


def test_constant_family_specializes_to_itself():
    z = CubicLinePair.parse("x0*x1*x2", "x0 + x1 + x2")
    assert ParamFamily.constant(z).specialize(1) == z


def test_identification_families_at_one():
    fams = {name: (fam, row) for name, fam, row in stability.identification_families()}
    for name, (fam, row) in fams.items():
        assert stability.classify(fam.specialize(1), certify=False).row == row


def test_family_with_parameter_limit():
    fam = ParamFamily.parse("x0*(x0*x2 + x1*(x1 + t*x2))", "x2")
    assert fam.limit_at_zero().equivalent(CubicLinePair.parse("x0*(x0*x2+x1^2)", "x2"))
    fam = ParamFamily.parse("x0^2*x2 + x1^2*(x0 + t*x1)", "x2")
    assert fam.limit_at_zero().equivalent(CubicLinePair.parse("x0*(x0*x2+x1^2)", "x2"))


@settings(max_examples=25, deadline=None)
@given(seeds, seeds)
def test_action_is_a_left_action(s1, s2):
    rng = random.Random(s1)
    g, h = random_transform(rng), random_transform(random.Random(s2))
    F = T("x0^3 - x0*x1*x2 + 2*x1^2*x2 + w*x2^3")
    assert act(g, act(h, F)) == act(g @ h, F)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_restriction_matches_evaluation(seed):
    rng = random.Random(seed)
    g = random_transform(rng)
    F = act(g, T("x0^3 + x1^3 + x2^3 - 3*x0*x1*x2 + x0^2*x1"))
    L = act(g, T("x0 - 2*x1 + x2"))
    P, Q = line_parametrization(L)
    b = restrict_to_line(F, L)
    for s, t in ((1, 0), (0, 1), (2, 3), (-1, 5)):
        pt = [s * p + t * q for p, q in zip(P, Q)]
        assert F.evaluate(pt) == b(s, t)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_action_agrees_with_sympy_substitution(seed):
    g = random_transform(random.Random(seed), cyclotomic=True)
    F = T("x0^2*x2 + x1^3 - x0*x1*x2")
    got = oracle.numeric(act(g, F))
    gi = g.inverse()
    inv = oracle.sp.Matrix([[oracle.numeric(c) for c in row] for row in gi.m])
    sub = dict(zip(oracle.X, inv * oracle.sp.Matrix(oracle.X)))
    want = oracle.numeric(F).subs(sub, simultaneous=True)
    assert oracle.sp.simplify(oracle.sp.expand(got - want)) == 0


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_inverse_transform(seed):
    g = random_transform(random.Random(seed), cyclotomic=True)
    assert (g @ g.inverse()).normalized() == ProjTransform.identity().normalized()


def test_cyclotomic_coefficients_print_and_parse():
    F = T("w*x0^3 + (1 - w)*x1^2*x2")
    assert T(str(F)) == F
    assert F.coeff((3, 0, 0)) == ZETA
