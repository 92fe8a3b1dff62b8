"""Hand-built pairs shared by the test modules."""
from cubicline.forms import CubicLinePair

# one pair per semistable row
ROW_PAIRS = {
    1: ("x0^3+x1^3+x2^3", "x0+2*x1+5*x2"),
    2: ("x1^2*(x1+x2)+x0*x2^2+x0^3", "x0"),
    3: ("x0*x1*x2", "x0+x1+x2"),
    4: ("x2*(x0*x1-x2^2)", "x0+x1+3*x2"),
    5: ("x0*(x0*x2+x1*(x1+x2))", "x2"),
    6: ("x0*(x0*x2+x1*(x0+x1))", "x2"),
    7: ("x0*(x0*x2+x1^2)", "x2"),
    8: ("x0*x1*x2+x1^3+x2^3", "x0+x1+2*x2"),
    9: ("x0*x1*x2+x1^3+x2^3", "4*x0-12*x1+15*x2"),
    10: ("x0*x2^2-x1^3", "x0+x1+x2"),
    11: ("x0^2*x2+x1^2*(x0+x1)", "x2"),
}

ROW_CURVES = {
    1: "Smooth", 2: "Smooth", 3: "Triangle", 4: "ConicPlusChord", 5: "ConicPlusChord",
    6: "ConicPlusTangentLine", 7: "ConicPlusTangentLine", 8: "IrreducibleNodal",
    9: "IrreducibleNodal", 10: "IrreducibleCuspidal", 11: "IrreducibleCuspidal",
}

STABLE = {1, 3, 4, 8, 10}

# one pair per unstable reason, each already in the shape used by the witness
UNSTABLE_PAIRS = {
    "i": ("x0^2*x2+x1^3+x2^3", "x2"),
    "ii": ("x2*(x0^2+x1^2+x0*x2)", "x2"),
    "iii": ("x0*x1*x2+x1^3+x2^3", "x1+x2"),
    "iv": ("x1^3+x2^3", "x0"),
    "v": ("x0*x2^2", "x0+x1+x2"),
}


def pair(forms):
    return CubicLinePair.parse(*forms)
