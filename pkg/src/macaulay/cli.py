"""Command-line interface.

System files look like::

    vars: x y
    # comments and blank lines are ignored
    x^2 - y
    y^2

Roots files hold one comma-separated point per line. Exit status is 0 on
success, 1 when the mathematics says no (non-isolated point, irrational
roots, ...), and 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .dualspace import apply_functional, dual_space
from .errors import DomainError, InputError, PolySyntaxError
from .groebner import GREVLEX, LEX, buchberger, quotient_dimension, solve_rational, standard_monomials
from .polycore import Polynomial, dual_names, format_poly, parse_point, parse_poly
from .theorems import (
    PolynomialSystem,
    Verdict,
    bezout_report,
    dual_member,
    nullstellensatz_power,
)


def _strip_comment(line):
    return line.split("#", 1)[0].strip()


def load_system(path) -> PolynomialSystem:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    vars = None
    polys = []
    for lineno, raw in enumerate(lines, start=1):
        text = _strip_comment(raw)
        if not text:
            continue
        if vars is None:
            head, sep, rest = text.partition(":")
            if not sep or head.strip() != "vars":
                raise PolySyntaxError("expected header 'vars: <name> ...'", 0, lineno, path)
            vars = rest.split()
            try:
                PolynomialSystem.of(vars, [Polynomial.constant(len(vars), 1)])
            except ValueError as exc:
                raise PolySyntaxError(str(exc), 0, lineno, path) from None
            continue
        offset = len(raw) - len(raw.lstrip())
        try:
            polys.append(parse_poly(text, vars))
        except PolySyntaxError as exc:
            raise PolySyntaxError(exc.message, offset + (exc.position or 0), lineno, path) from None
        except InputError as exc:
            pos = getattr(exc, "position", None)
            raise PolySyntaxError(str(exc), None if pos is None else offset + pos, lineno, path) from None
    if vars is None:
        raise PolySyntaxError("missing 'vars:' header", 0, 1, path)
    if not polys:
        raise PolySyntaxError("no polynomials after the header", None, None, path)
    try:
        return PolynomialSystem.of(vars, polys)
    except ValueError as exc:
        raise PolySyntaxError(str(exc), None, None, path) from None


def load_roots(path, nvars: int) -> list[tuple]:
    path = Path(path)
    points = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        text = _strip_comment(raw)
        if not text:
            continue
        try:
            points.append(parse_point(text, nvars))
        except InputError as exc:
            raise PolySyntaxError(str(exc), None, lineno, path) from None
    return points


# -- report assembly ----------------------------------------------------------


def _q(value):
    return str(value)


def _point(x):
    return [_q(v) for v in x]


def _inputs(args, system):
    out = {
        "system": str(args.system),
        "vars": list(system.vars),
        "polys": [format_poly(p, system.vars) for p in system.polys],
    }
    for key in ("point", "poly", "roots", "order"):
        value = getattr(args, key, None)
        if value is not None:
            out[key] = str(value)
    return out


def _dual(system, p):
    return format_poly(p, dual_names(system.nvars))


def _cmd_dual(args, system):
    x = parse_point(args.point, system.nvars)
    space = dual_space(system.polys, x)
    return {
        "point": _point(space.point),
        "basis": [_dual(system, p) for p in space.basis],
        "multiplicity": space.multiplicity,
        "truncation_degree": space.truncation_degree,
    }


def _cmd_mult(args, system):
    x = parse_point(args.point, system.nvars)
    return {"point": _point(x), "multiplicity": dual_space(system.polys, x).multiplicity}


def _cmd_bezout(args, system):
    roots = load_roots(args.roots, system.nvars) if args.roots else None
    report = bezout_report(system, roots)
    infinite = report.verdict is Verdict.INFINITE
    out = {
        "verdict": report.verdict.value,
        "roots": [
            {
                "point": _point(x),
                "multiplicity": m,
                "basis": [_dual(system, p) for p in space.basis],
            }
            for x, m, space in report.roots
        ],
        "total": "infinite" if infinite else report.total,
        "bezout_number": report.bezout_number,
        "completeness": report.completeness,
        "quotient_dimension": "infinite" if infinite else report.quotient_dimension,
        "oracle_agreement": report.oracle_agrees,
    }
    if report.infinity_checked:
        evidence = report.infinity_evidence
        out["infinity_evidence"] = (
            {"present": False}
            if evidence is None
            else {"present": True, "common_factor": format_poly(evidence, system.vars)}
        )
    return out


def _cmd_member(args, system):
    f = parse_poly(args.poly, system.vars)
    verdict = dual_member(f, system)
    out = {"member": verdict.member}
    if verdict.witness is not None:
        x, p = verdict.witness
        out["witness"] = {
            "point": _point(x),
            "functional": _dual(system, p),
            "value": _q(apply_functional(p, f, x)),
        }
    out["oracle_agreement"] = verdict.oracle_agrees
    return out


def _cmd_power(args, system):
    f = parse_poly(args.poly, system.vars)
    cert = nullstellensatz_power(f, system)
    return {"certificate": {"m": cert.m, "bound": cert.bound}}


def _cmd_gb(args, system):
    order = {"lex": LEX, "grevlex": GREVLEX}[args.order]
    gb = buchberger(system.polys, order)
    monos = standard_monomials(gb)
    one = Polynomial.constant(system.nvars, 1)
    return {
        "basis": [format_poly(g, system.vars) for g in gb.generators],
        "standard_monomials": "infinite"
        if monos is None
        else [format_poly(one.mul_monomial(a), system.vars) for a in monos],
        "quotient_dimension": "infinite" if monos is None else quotient_dimension(gb),
    }


def _cmd_solve(args, system):
    solved = solve_rational(system.polys, names=system.vars)
    return {"points": [_point(x) for x in solved.points], "complete": solved.complete}


COMMANDS = {
    "dual": _cmd_dual,
    "mult": _cmd_mult,
    "bezout": _cmd_bezout,
    "member": _cmd_member,
    "power": _cmd_power,
    "gb": _cmd_gb,
    "solve": _cmd_solve,
}


def emit_json(report: dict) -> str:
    return json.dumps(report, ensure_ascii=False)


def _render_value(value):
    if isinstance(value, list):
        return "(" + ",".join(value) + ")"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def emit_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key in ("command", "inputs"):
            continue
        if key == "roots":
            lines.append(f"roots: {len(value)}")
            for r in value:
                basis = ", ".join(r["basis"])
                lines.append(f"  ({','.join(r['point'])})  multiplicity {r['multiplicity']}  basis [{basis}]")
        elif key == "points":
            lines.append(f"points: {len(value)}")
            lines.extend(f"  ({','.join(p)})" for p in value)
        elif key == "basis":
            lines.append("basis:")
            lines.extend(f"  {b}" for b in value)
        elif key == "standard_monomials":
            shown = value if isinstance(value, str) else ", ".join(value)
            lines.append(f"standard_monomials: {shown}")
        elif key == "point":
            lines.append(f"point: ({','.join(value)})")
        elif isinstance(value, dict):
            inner = ", ".join(
                f"{k}={_render_value(v)}"
                for k, v in value.items()
            )
            lines.append(f"{key}: {inner}")
        else:
            lines.append(f"{key}: {_render_value(value)}")
    return "\n".join(lines)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="macaulay",
        description="Dual spaces, intersection multiplicities and ideal membership over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, point=False, poly=False, roots=False, order=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("--system", required=True, type=Path, help="system file")
        if point:
            p.add_argument("--point", required=True, help='comma-separated coordinates, e.g. "0,1/2"')
        if poly:
            p.add_argument("--poly", required=True, help="polynomial expression")
        if roots:
            p.add_argument("--roots", type=Path, help="roots file (default: solve the system)")
        if order:
            p.add_argument("--order", choices=("lex", "grevlex"), default="lex")
        p.add_argument("--json", action="store_true", help="emit one JSON object")

    add("dual", "dual space basis and multiplicity at a point", point=True)
    add("mult", "intersection multiplicity at a point", point=True)
    add("bezout", "multiplicity total against the product of degrees", roots=True)
    add("member", "ideal membership via dual functionals", poly=True)
    add("power", "least power of a polynomial lying in the ideal", poly=True)
    add("gb", "reduced Groebner basis and standard monomials", order=True)
    add("solve", "rational common zeros")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        system = load_system(args.system)
        result = COMMANDS[args.command](args, system)
    except OSError as exc:
        print(f"error: cannot read {exc.filename}: {exc.strerror}", file=stderr)
        return 2
    except InputError as exc:
        print(f"error: {args.command}: {exc}", file=stderr)
        return 2
    except DomainError as exc:
        print(f"error: {args.command} on {args.system}: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    report = {"command": args.command, "inputs": _inputs(args, system), **result}
    print(emit_json(report) if args.json else emit_text(report), file=stdout)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
