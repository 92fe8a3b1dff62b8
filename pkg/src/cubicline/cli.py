"""Command line front end.

Pairs are given inline as two expressions ("x0*x1*x2" "x0+x1+x2") or in a
file with optional header lines and one "C ; L" pair per line:

    # comment
    field: Q(w)[r]/(r^2 - 2)
    x0*x2^2 - x1^3 ; x0 + r*x1

Exit codes: 0 success, 2 parse error, 3 irrational singular point,
4 a verification failed.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from . import atlas, hesse, stability
from .forms import CubicLinePair, FormError, random_scalar
from .geometry import IrrationalSingularity, contact_type
from .scalars import BASE, FieldTower, ScalarParseError, TowerError, adjoin_quadratic, parse_scalar

SCHEMA = 1

EXIT_OK, EXIT_PARSE, EXIT_IRRATIONAL, EXIT_VERIFY = 0, 2, 3, 4


class VerificationFailed(Exception):
    pass


class ParseFailure(Exception):
    pass


def parse_field(text: str) -> FieldTower:
    text = text.strip().replace(" ", "")
    if text in ("Q(w)", "base", ""):
        return BASE
    if text.startswith("Q(w)[r]/(") and text.endswith(")"):
        return adjoin_quadratic(BASE, text[len("Q(w)[r]/("):-1])
    raise ParseFailure("unknown field %r (use Q(w) or Q(w)[r]/(r^2 + p r + q))" % text)


def read_pairs(path: str, tower: FieldTower = BASE) -> List[CubicLinePair]:
    fh = sys.stdin if path == "-" else open(path)
    try:
        lines = fh.read().splitlines()
    finally:
        if fh is not sys.stdin:
            fh.close()
    pairs = []
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("field:"):
            if pairs:
                raise ParseFailure("line %d: field header after the first pair" % n)
            tower = parse_field(line.split(":", 1)[1])
            continue
        if ";" not in line:
            raise ParseFailure("line %d: expected 'C ; L'" % n)
        c, l = line.split(";", 1)
        pairs.append(CubicLinePair.parse(c.strip(), l.strip(), tower))
    return pairs


def _pairs(args) -> List[CubicLinePair]:
    tower = parse_field(args.field) if args.field else BASE
    if args.file:
        return read_pairs(args.file, tower)
    if args.cubic is None or args.line is None:
        raise ParseFailure("give a cubic and a line, or --file")
    return [CubicLinePair.parse(args.cubic, args.line, tower)]


def _triple(text: str, n: int = 3):
    parts = [p for p in text.replace(" ", "").split(",")]
    if len(parts) != n:
        raise ParseFailure("expected %d comma separated values, got %r" % (n, text))
    return parts


def _hesse_point(text: str) -> hesse.HessePoint:
    if ":" in text:
        a, b = text.split(":", 1)
        return hesse.HessePoint(parse_scalar(a), parse_scalar(b))
    return hesse.HessePoint.from_mu(parse_scalar(text))


# -- commands ------------------------------------------------------------------


def cmd_classify(args):
    out = []
    for z in _pairs(args):
        v = stability.classify(z)
        if v.certificate is not None and v.certificate.verify(z) != v.certificate.mu:
            raise VerificationFailed("certificate did not verify")
        out.append({"pair": z.to_json(), **v.to_json()})
    return out, ["%s: %s%s" % (r["pair"]["C"] + " ; " + r["pair"]["L"], r["status"],
                               " row %d" % r["row"] if r["row"] else
                               " reason (%s)" % r["reason"]) for r in out]


def cmd_mu(args):
    lam = stability.OnePS(*(int(x) for x in _triple(args.r)))
    out = [{"pair": z.to_json(), "lambda": lam.to_json(), "mu": stability.mu(z, lam)}
           for z in _pairs(args)]
    return out, [str(r["mu"]) for r in out]


def cmd_worst(args):
    out = []
    for z in _pairs(args):
        w = stability.worst_one_ps(z)
        out.append({"pair": z.to_json(), **w.to_json()})
    return out, ["lambda=%s value=%s mu=%d" % (tuple(r["lambda"]), r["value"], r["mu"])
                 for r in out]


def cmd_witness(args):
    out = []
    for z in _pairs(args):
        g, lam = stability.destabilizing_witness(z, reason=args.reason)
        c = stability.Certificate(g, lam, stability.mu(z.act(g), lam))
        if c.mu >= 0:
            raise VerificationFailed("witness does not destabilize")
        out.append({"pair": z.to_json(), **c.to_json()})
    return out, ["mu=%d lambda=%s g=%s" % (r["mu"], tuple(r["lambda"]), r["g"]) for r in out]


def cmd_normal_form(args):
    out = []
    for z in _pairs(args):
        g, zk = stability.normal_form(z)
        if not z.act(g).equivalent(zk):
            raise VerificationFailed("normal form transform did not verify")
        out.append({"pair": z.to_json(), "g": g.to_json(), "normal_form": zk.to_json()})
    return out, ["%s ; %s  via g=%s" % (r["normal_form"]["C"], r["normal_form"]["L"], r["g"])
                 for r in out]


def cmd_wcusp(args):
    out = []
    for z in _pairs(args):
        w = stability.wcusp_coordinate(z)
        out.append({"pair": z.to_json(), **w.to_json()})
    return out, ["(%s : %s) D=%s row %d" % (*r["weighted_point"], r["D"], r["row"]) for r in out]


def cmd_hesse(args):
    what = args.what
    if what == "group":
        G = hesse.g216()
        sub = hesse.level_subgroup()
        res = {"order": G.order, "closed": G.is_closed(), "level_subgroup_order": sub.order}
        if args.order:
            return res, [str(G.order)]
        return res, ["|G216| = %d, level subgroup order %d" % (G.order, sub.order)]
    if what == "incidence":
        t = hesse.incidence_table()
        res = t.to_json()
        if t.mismatches():
            raise VerificationFailed("incidence mismatches: %s" % t.mismatches())
        return res, ["%s: %s" % (k, ", ".join(v)) for k, v in sorted(res["lines"].items())]
    if what in ("orbit", "j"):
        if args.mu is None:
            raise ParseFailure("hesse %s needs a parameter (mu or mu0:mu1)" % what)
        m = _hesse_point(args.mu)
        if what == "j":
            jv = hesse.j_invariant(m)
            return {"mu": m.to_json(), "j": str(jv)}, [str(jv)]
        orbit, stab = hesse.orbit_and_stabilizer(m)
        if len(orbit) * stab != 216:
            raise VerificationFailed("orbit-stabilizer product is not 216")
        if sorted(orbit, key=lambda p: p.sort_key()) != \
                sorted(hesse.orbit_formula(m), key=lambda p: p.sort_key()):
            raise VerificationFailed("orbit does not match the closed-form list")
        return ({"mu": m.to_json(), "orbit": [p.to_json() for p in orbit], "stabilizer": stab},
                ["orbit size %d, stabilizer order %d" % (len(orbit), stab)]
                + ["  " + str(p) for p in orbit])
    if what == "fiber":
        out, text = [], []
        for z in _pairs(args):
            pts = hesse.fiber(z)
            out.append({"pair": z.to_json(), "size": len(pts),
                        "points": [{"mu": m.to_json(), "b": b.to_json(), "witness": g.to_json()}
                                   for m, b, g in pts]})
            text.append("%d points in the fibre" % len(pts))
        return out, text
    raise ParseFailure("unknown hesse query %r" % what)


def _report_lines(reps):
    return ["%s chart %s: %s (%d samples)" % (r.name, r.chart, "pass" if r.passed else "FAIL",
                                             len(r.records)) for r in reps]


def _check_reports(reps):
    if not all(r.passed for r in reps):
        raise VerificationFailed("atlas verification failed")


def cmd_atlas(args):
    rng = random.Random(args.seed)
    what = args.what
    reps = []
    if what == "verify-phi":
        tower = (BASE.zero(), 0)
        if args.tower:
            a, i = args.tower.split(",")
            tower = (parse_scalar(a), int(i))
        charts = [args.chart] if args.chart else range(1, 8)
        reps = [atlas.verify_phi_extension(j, args.samples, rng, tower) for j in charts]
    elif what == "verify-psi":
        charts = [args.chart] if args.chart else range(1, 5)
        reps = [atlas.verify_psi_extension(r, args.samples, rng) for r in charts]
    elif what == "strata":
        if args.family in (None, "phi"):
            reps += [atlas.verify_phi_strata(j) for j in range(1, 8)
                     if not args.chart or j == args.chart]
        if args.family in (None, "psi"):
            reps += [atlas.verify_psi_strata(r) for r in range(1, 5)
                     if not args.chart or r == args.chart]
    elif what == "transitions":
        pairs = [tuple(int(x) for x in args.pair.split(","))] if args.pair else \
            [(j, jp) for j in range(1, 8) for jp in range(j + 1, 8)]
        for j, jp in pairs:
            try:
                reps.append(atlas.verify_phi_transition(j, jp, args.samples, rng))
            except atlas.ChartDomainError:
                continue    # no overlap reachable by the monomial sampler
    else:
        raise ParseFailure("unknown atlas check %r" % what)
    res = [r.to_json() for r in reps]
    _check_reports(reps)
    return res, _report_lines(reps)


def cmd_family(args):
    rng = random.Random(args.seed)
    out, text = [], []
    which = args.which
    if which in ("all", "identification"):
        for name, fam, row in stability.identification_families():
            lim = fam.limit_at_zero()
            ok = lim.equivalent(stability.representative(7))
            if not ok:
                raise VerificationFailed("%s does not degenerate to z7" % name)
            out.append({"family": name, "limit": lim.to_json(), "row": row})
            text.append("%s -> %s ; %s" % (name, lim.C, lim.L))
    if which in ("all", "graph"):
        if args.b and args.B:
            b1, b2 = (parse_scalar(x) for x in _triple(args.b, 2))
            B1, B2 = (parse_scalar(x) for x in _triple(args.B, 2))
        else:
            b1, b2 = random_scalar(rng, 4, nonzero=True), random_scalar(rng, 4)
            B1, B2 = random_scalar(rng, 4), random_scalar(rng, 4, nonzero=True)
        gc = atlas.graph_closure_family(b1, b2, B1, B2)
        v1 = stability.classify(gc.first, certify=False)
        ct = contact_type(gc.second.C, gc.second.L)
        out.append({"family": "graph", "b": [str(b1), str(b2)], "B": [str(B1), str(B2)],
                    "first_limit": gc.first.to_json(), "first_row": v1.row,
                    "second_limit": gc.second.to_json(), "second_contact": ct.kind})
        text.append("graph: %s ; %s (row %s)  |  %s ; %s (%s)"
                    % (gc.first.C, gc.first.L, v1.row, gc.second.C, gc.second.L, ct.kind))
    if which in ("all", "wt"):
        lim = atlas.mu_to_one_family().limit_at_zero()
        out.append({"family": "mu->1", "limit": lim.to_json()})
        text.append("mu -> 1: %s ; %s" % (lim.C, lim.L))
    return out, text


# -- parser --------------------------------------------------------------------


def _add_pair_args(p):
    p.add_argument("cubic", nargs="?", help="cubic form in x0, x1, x2 (w = primitive cube root of 1)")
    p.add_argument("line", nargs="?", help="linear form")
    p.add_argument("--file", help="file with one 'C ; L' pair per line ('-' for stdin)")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="cubicline", description=__doc__,
                                  formatter_class=argparse.RawDescriptionHelpFormatter)
    top.add_argument("--format", choices=("human", "json"), default="human")
    top.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    top.add_argument("--field", help="coefficient field: Q(w) or Q(w)[r]/(minpoly in r)")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="stability verdict, table row, certificate")
    _add_pair_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("mu", help="Hilbert-Mumford index for a weight r0,r1,r2")
    _add_pair_args(p)
    p.add_argument("--r", required=True, help="normalized weights, e.g. 3,1,-4")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("worst-1ps", help="weight minimizing mu in the given frame")
    _add_pair_args(p)
    p.set_defaults(func=cmd_worst)

    p = sub.add_parser("witness", help="destabilizing transform and weight")
    _add_pair_args(p)
    p.add_argument("--reason", choices=("i", "ii", "iii", "iv", "v"))
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("normal-form", help="transform to the strictly semistable representative")
    _add_pair_args(p)
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("wcusp", help="weighted coordinate of a cuspidal pair")
    _add_pair_args(p)
    p.set_defaults(func=cmd_wcusp)

    p = sub.add_parser("hesse", help="Hesse group, orbits, fibres, j-invariant, incidences")
    p.add_argument("what", choices=("orbit", "fiber", "j", "incidence", "group"))
    p.add_argument("mu", nargs="?", help="for orbit/j: mu or mu0:mu1; for fiber: the cubic")
    p.add_argument("line", nargs="?", help="for fiber: the line")
    p.add_argument("--file")
    p.add_argument("--order", action="store_true", help="group: print only the order")
    p.set_defaults(func=cmd_hesse)

    p = sub.add_parser("atlas", help="chart atlas verifications")
    p.add_argument("what", choices=("verify-phi", "verify-psi", "strata", "transitions"))
    p.add_argument("--chart", type=int)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--tower", help="verify-phi: a,i with a in 0,1,w,w^2")
    p.add_argument("--family", choices=("phi", "psi"))
    p.add_argument("--pair", help="transitions: j,j'")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("family", help="degenerating families and their limits")
    p.add_argument("what", choices=("limits",))
    p.add_argument("--which", choices=("all", "identification", "graph", "wt"), default="all")
    p.add_argument("--b", help="graph family: b1,b2")
    p.add_argument("--B", help="graph family: B1,B2")
    p.set_defaults(func=cmd_family)
    return top


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.command == "hesse" and args.what == "fiber":
        args.cubic = args.mu
    try:
        result, text = args.func(args)
        code = EXIT_OK
        err = None
    except (ScalarParseError, FormError, ParseFailure, TowerError) as e:
        result, text, code, err = None, [], EXIT_PARSE, "parse error: %s" % e
    except IrrationalSingularity as e:
        result, text, code, err = None, [], EXIT_IRRATIONAL, "irrational singularity: %s" % e
    except (VerificationFailed, stability.StabilityError, atlas.AtlasError,
            hesse.DegenerateFiber) as e:
        result, text, code, err = None, [], EXIT_VERIFY, "verification failed: %s" % e
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": args.command, "exit": code, "result": result}
        if err:
            doc["error"] = err
        out.write(json.dumps(doc, sort_keys=True, indent=1) + "\n")
    else:
        for line in text:
            out.write(line + "\n")
        if err:
            sys.stderr.write(err + "\n")
    return code


def main() -> None:
    sys.exit(run())
