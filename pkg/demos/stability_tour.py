"""Walk through the stability verdicts for a few cubic-line pairs.

Run with ``python3 demos/stability_tour.py``.
"""
from cubicline import CubicLinePair, classify, mu, worst_one_ps
from cubicline import stability as S

P = CubicLinePair.parse

# a triangle with a general line is stable
z = P("x0*x1*x2", "x0+x1+x2")
v = classify(z)
print("triangle + general line:", v.status, "row", v.row)

# an inflectional tangent destabilizes already in this frame
z = P("x0^2*x2+x1^3", "x2")
print("mu at (3,1,-4):", mu(z, (3, 1, -4)))
w = worst_one_ps(z)
print("worst weight", w.lam, "value", w.value)
v = classify(z)
print("verdict:", v.status, "reason", v.reason, "certificate mu", v.certificate.mu)

# the five reasons, each with its witness
for reason, (c, l) in [("i", ("x0^2*x2+x1^3+x2^3", "x2")),
                       ("ii", ("x2*(x0^2+x1^2+x0*x2)", "x2")),
                       ("iii", ("x0*x1*x2+x1^3+x2^3", "x1+x2")),
                       ("iv", ("x1^3+x2^3", "x0")),
                       ("v", ("x0*x2^2", "x0+x1+x2"))]:
    z = P(c, l)
    g, lam = S.destabilizing_witness(z)
    print("  (%s) weight %s gives mu %d" % (reason, lam, mu(z.act(g), lam)))

# strictly semistable rows and their normal forms
z = P("x0*(x0*x2+x1*(x1+7*x2))", "x2")
g, zk = S.normal_form(z)
print("row", classify(z).row, "normal form", zk)

# all three degenerations land on z7
for name, fam, _ in S.identification_families():
    print("  %s -> %s" % (name, fam.limit_at_zero()))

# the cuspidal stratum is a weighted projective line
for b in [(1, 1), (3, 2)]:
    w = S.wcusp_coordinate(S.wcusp_pair(*b))
    print("cusp line b =", b, "D =", w.D, "row", w.row)
