"""Command line front end.

    seifert-sections info "M(0; (2,1), (3,-1))"
    seifert-sections sections "M(0; (1,1))" --scan 5 [--json]
    seifert-sections s3 --alphas 2 3 --k-max 2 --verify
    seifert-sections quotient "M(0; (2,1), (3,-1))" --d 2
    seifert-sections surgery "M(0; (2,1), (3,-1))"
    seifert-sections wps --weights 1 2 3 --d 6
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .quotient import zd_quotient
from .seifert_core import (InvalidSeifertData, NormalForm, ParseError, SeifertData,
                           euler_number, normalize, parse_seifert)
from .sections import (Boundary, ClosedUndeterminedComponents, Interior, SectionReport,
                       classify_one_section, classify_positive_d_section)
from .sphere import (admissible_d, rh_hopf_lift_genus, sphere_from_weights, table_rows)
from .surgery import surgery_presentation
from .wps import WeightedPlane, admissible_degrees, degree_genus

SCHEMA = 1


class VerificationFailed(Exception):
    pass


def frac(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def normal_form_json(nf: NormalForm) -> dict:
    return {"g": nf.base_genus, "b": nf.b,
            "pairs": [[p.alpha, p.beta] for p in nf.singular_pairs]}


def _role(role) -> str:
    if isinstance(role, Boundary):
        return "boundary:+" if role.sign > 0 else "boundary:-"
    return f"interior:{role.intersections}"


def section_json(rep) -> dict:
    if not rep.exists:
        return {"d": rep.d, "exists": False, "genus": None, "boundary": None,
                "roles": None, "b_bar": None, "obstruction": rep.detail}
    out = {"d": rep.d, "exists": True, "genus": rep.genus, "boundary": rep.boundary_count,
           "roles": [_role(r) for r in rep.fiber_roles], "b_bar": rep.b_bar,
           "obstruction": None}
    if isinstance(rep.topology, ClosedUndeterminedComponents):
        out["chi"] = rep.topology.euler_characteristic
    return out


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# -- commands -----------------------------------------------------------------

def cmd_info(args) -> list[str]:
    m = parse_seifert(args.spec)
    nf = normalize(m)
    e = euler_number(m)
    one = classify_one_section(m)
    if args.json:
        one_js = {"exists": one.exists}
        if one.exists:
            one_js.update({
                "signs": [None if s is None else "".join("+" if x > 0 else "-" for x in sorted(s, reverse=True))
                          for s in one.signs],
                "net_regular_boundary": one.net_regular_boundary,
                "genus": one.genus,
            })
        else:
            one_js["obstruction_index"] = one.obstruction_index
        return [_dump({"schema": SCHEMA, "input": str(m), "normal_form": normal_form_json(nf),
                       "euler": frac(e), "one_section": one_js})]
    lines = [f"input        {m}",
             f"normal form  {nf}",
             f"euler        e = {frac(e)}"]
    if not nf.singular_pairs and nf.b == 1 and m.base_genus == 0:
        lines.append("             (the Hopf fibration of S^3)")
    if one.exists:
        signs = ", ".join(f"{p}:{'/'.join('+' if x > 0 else '-' for x in sorted(s, reverse=True))}"
                          for p, s in zip(m.pairs, one.signs) if s is not None)
        lines.append(f"1-section    exists, genus {one.genus}, net regular boundary b+ - b- = "
                     f"{one.net_regular_boundary}")
        if signs:
            lines.append(f"             singular boundary signs: {signs}")
    else:
        p = m.pairs[one.obstruction_index]
        lines.append(f"1-section    none: pair {one.obstruction_index} {p} has beta != +-1 mod alpha")
    return lines


def _describe(rep, m: SeifertData) -> list[str]:
    if not rep.exists:
        return [f"d = {rep.d}: no positive {rep.d}-section ({rep.detail})"]
    lines = [f"d = {rep.d}: positive {rep.d}-section exists"]
    if isinstance(rep.topology, ClosedUndeterminedComponents):
        lines.append(f"  closed (no boundary), chi = {rep.topology.euler_characteristic}, "
                     f"components undetermined")
    else:
        lines.append(f"  genus {rep.genus}, boundary components {rep.boundary_count}")
    if m.pairs:
        lines.append("  roles: " + ", ".join(f"{p} {r}" for p, r in zip(m.pairs, rep.fiber_roles)))
    lines.append(f"  b_bar = {rep.b_bar}, k = {rep.k}, eps = {list(rep.epsilons)}, "
                 f"a = {list(rep.a_coeffs)}")
    return lines


def cmd_sections(args) -> list[str]:
    m = parse_seifert(args.spec)
    ds = [args.d] if args.d is not None else list(range(1, args.scan + 1))
    if min(ds) < 1:
        raise ValueError("d must be >= 1")
    reports = [classify_positive_d_section(m, d) for d in ds]
    e = euler_number(m)
    if args.json:
        return [_dump({"schema": SCHEMA, "input": str(m), "normal_form": normal_form_json(normalize(m)),
                       "euler": frac(e), "sections": [section_json(r) for r in reports]})]
    lines = [f"{m}  e = {frac(e)}"]
    if args.d is not None:
        return lines + _describe(reports[0], m)
    found = [r for r in reports if r.exists]
    for r in found:
        if isinstance(r.topology, ClosedUndeterminedComponents):
            lines.append(f"d={r.d:<4} closed  chi={r.topology.euler_characteristic}")
        else:
            lines.append(f"d={r.d:<4} genus={r.genus:<6} boundary={r.boundary_count}")
    if not found:
        why = " (e > 0)" if e > 0 else ""
        lines.append(f"no positive d-section for d <= {args.scan}{why}")
    return lines


def _verify_row(f, m, row) -> dict:
    rep = classify_positive_d_section(m, row.d)
    general = rep.genus if isinstance(rep, SectionReport) else None
    general_bd = rep.boundary_count if isinstance(rep, SectionReport) else None
    rh = rh_hopf_lift_genus(f, row)
    dg = degree_genus(WeightedPlane(1, f.alpha1, f.alpha2), row.d)
    agree = (general == row.genus == rh == dg and general_bd == row.boundary_count)
    return {"general": general, "table": row.genus, "rh_hopf": rh,
            "degree_genus": frac(dg), "agree": agree}


def cmd_s3(args) -> list[str]:
    a1, a2 = args.alphas
    f = sphere_from_weights(a1, a2)
    m = f.to_seifert()
    rows = table_rows(f, args.k_max)
    checks = [_verify_row(f, m, r) for r in rows] if args.verify else [None] * len(rows)
    failed = any(c is not None and not c["agree"] for c in checks)
    if args.json:
        out = {"schema": SCHEMA, "input": {"alphas": [a1, a2]}, "betas": [f.beta1, f.beta2],
               "euler": frac(euler_number(m)), "rows": []}
        for r, c in zip(rows, checks):
            js = {"family": r.family.value, "k": r.k_param, "d": r.d, "boundary": r.boundary_count,
                  "c1_in_boundary": r.c1_in_boundary, "c2_in_boundary": r.c2_in_boundary,
                  "genus": r.genus}
            if c is not None:
                js["verify"] = c
            out["rows"].append(js)
        lines = [_dump(out)]
    else:
        lines = [f"S^3 fibration alphas=({a1},{a2}) betas=({f.beta1},{f.beta2}) "
                 f"e={frac(euler_number(m))}  {m}"]
        head = f"{'family':<13}{'k':>3}{'d':>6}{'#bd':>5}  {'C1':<4}{'C2':<4}{'genus':>6}"
        if args.verify:
            head += f"{'general':>9}{'rh_hopf':>9}{'deg_gen':>9}  status"
        lines.append(head)
        for r, c in zip(rows, checks):
            line = (f"{r.family.value:<13}{r.k_param:>3}{r.d:>6}{r.boundary_count:>5}  "
                    f"{'bd' if r.c1_in_boundary else '-':<4}{'bd' if r.c2_in_boundary else '-':<4}"
                    f"{r.genus:>6}")
            if c is not None:
                line += (f"{str(c['general']):>9}{c['rh_hopf']:>9}{c['degree_genus']:>9}  "
                         f"{'agree' if c['agree'] else 'DISAGREE'}")
            lines.append(line)
        if args.verify:
            n_ok = sum(c["agree"] for c in checks)
            lines.append(f"{n_ok}/{len(checks)} rows agree")
    if failed:
        raise VerificationFailed("\n".join(lines))
    return lines


def cmd_quotient(args) -> list[str]:
    m = parse_seifert(args.spec)
    q = zd_quotient(m, args.d)
    e, eq = euler_number(m), euler_number(q)
    if eq != args.d * e:
        raise VerificationFailed(f"Euler law violated: {frac(eq)} != {args.d}*{frac(e)}")
    if args.json:
        return [_dump({"schema": SCHEMA, "input": str(m), "d": args.d, "quotient": str(q),
                       "normal_form": normal_form_json(normalize(q)), "euler": frac(e),
                       "quotient_euler": frac(eq)})]
    return [f"{m} / Z_{args.d} = {q}",
            f"normal form  {normalize(q)}",
            f"euler check  {frac(eq)} = {args.d} * ({frac(e)})"]


def cmd_surgery(args) -> list[str]:
    m = parse_seifert(args.spec)
    diag = surgery_presentation(m)
    if args.json:
        return [_dump({"schema": SCHEMA, "input": str(m), "diagram": diag.to_json()})]
    return [diag.to_text()]


def cmd_wps(args) -> list[str]:
    p = WeightedPlane(*args.weights)
    g = degree_genus(p, args.d)
    reps = []
    if p.a0 == 1:
        reps = [r for r in admissible_degrees(p.a1, p.a2, args.d) if r[0] == args.d]
    if args.json:
        return [_dump({"schema": SCHEMA, "input": {"weights": list(p.weights), "d": args.d},
                       "genus": frac(g), "integral": g.denominator == 1,
                       "representations": [list(r[1:]) for r in reps]})]
    lines = [f"P{p.weights}, d = {args.d}: genus {frac(g)}"]
    if g.denominator != 1 or g < 0:
        lines.append("  (not a non-negative integer: no non-singular curve of this degree)")
    if p.a0 == 1:
        if reps:
            lines.append("  d = k*a1*a2 + eps1*a1 + eps2*a2 with (k, eps1, eps2) in "
                         + ", ".join(str(r[1:]) for r in reps))
        else:
            lines.append("  no curve f(z1,z2) - z0^d = 0 of this degree")
    return lines


# -- entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="seifert-sections",
                                 description="Global surfaces of section of Seifert fibrations")
    ap.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    # --out is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS,
                        help="write output to FILE instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="normal form, Euler number, 1-sections")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("sections", parents=[common], help="positive d-sections")
    p.add_argument("spec")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--d", type=int)
    g.add_argument("--scan", type=int, metavar="D_MAX")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sections)

    p = sub.add_parser("s3", parents=[common], help="table of positive d-sections of a Seifert fibration of S^3")
    p.add_argument("--alphas", type=int, nargs=2, required=True, metavar=("A1", "A2"))
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_s3)

    p = sub.add_parser("quotient", parents=[common], help="Z_d-quotient")
    p.add_argument("spec")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("surgery", parents=[common], help="surgery diagram (base genus 0)")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("wps", parents=[common], help="degree-genus formula in P(a0,a1,a2)")
    p.add_argument("--weights", type=int, nargs=3, required=True, metavar=("A0", "A1", "A2"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_wps)
    return ap


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lines = args.func(args)
    except VerificationFailed as exc:
        _emit(str(exc) + "\n", args.out)
        return 1
    except ParseError as exc:
        print(f"error: cannot parse {args.spec!r}: {exc}", file=sys.stderr)
        return 2
    except (InvalidSeifertData, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit("\n".join(lines) + "\n", args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
