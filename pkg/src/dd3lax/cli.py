"""Command-line front end: ``dd3lax verify | emit | eval``.

Exit status: 0 when everything checked holds, 1 on a relation failure,
2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import lax
from .double import BASIS, casimir, universal_R
from .latex import to_latex
from .matrices import AlgebraValuedMatrix, ScalarMatrix
from .reps import IrrepLabel, irrep
from .scalars import parse_rational
from .verify import SUITES, all_passed, default_jobs, resolve_suites, run_suites, specialized_sides

OBJECTS = ("R21", "R3p", "L2", "L3", "UR", "c1", "c2", "rep:<label>", "derivedL:<lax>:<label>")


class UsageError(Exception):
    pass


def parse_subst(items: Optional[Sequence[str]]) -> Dict[str, Fraction]:
    out: Dict[str, Fraction] = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in ("x", "y"):
            raise UsageError(f"bad substitution {item!r}; expected x=<rational> or y=<rational>")
        try:
            out[name] = parse_rational(value)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad rational in substitution {item!r}") from None
    return out


def build_object(selector: str):
    simple = {
        "R21": lax.r_matrix_2,
        "R3p": lax.r_matrix_3,
        "L2": lax.universal_lax_2,
        "L3": lax.universal_lax_3,
        "UR": universal_R,
        "c1": lambda: casimir(1),
        "c2": lambda: casimir(2),
    }
    if selector in simple:
        return simple[selector]()
    kind, _, rest = selector.partition(":")
    try:
        if kind == "rep" and rest:
            return irrep(IrrepLabel.parse(rest))
        if kind == "derivedL":
            name, _, code = rest.partition(":")
            if name not in lax.LAX_OPERATORS:
                raise UsageError(f"unknown Lax operator {name!r}; expected L2 or L3")
            return lax.derived_L(name, IrrepLabel.parse(code))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown object {selector!r}; expected one of {', '.join(OBJECTS)}")


def _substitute(obj, subst: Dict[str, Fraction]):
    if not subst:
        return obj
    x, y = subst.get("x"), subst.get("y")
    if isinstance(obj, (ScalarMatrix, AlgebraValuedMatrix)):
        return obj.evaluate(x=x, y=y)
    if hasattr(obj, "map_coefficients"):
        return obj.map_coefficients(lambda c: c.evaluate(x, y))
    if hasattr(obj, "terms") and hasattr(obj, "arity"):
        from .double import TensorElement

        return TensorElement(obj.arity, {k: c.evaluate(x, y) for k, c in obj.terms.items()})
    return obj


def _rep_json(rep) -> dict:
    return {
        "label": rep.label.code,
        "dim": rep.dim,
        "images": [
            {"g": u.grp.label, "h": u.dual.label, "matrix": rep.image(u).to_json()} for u in BASIS
        ],
    }


def _rep_latex(rep) -> str:
    lines = [
        f"\\pi_{{{rep.label.code}}}(\\sigma) = {to_latex(rep.sigma)}",
        f"\\pi_{{{rep.label.code}}}(\\tau) = {to_latex(rep.tau)}",
    ]
    for h, m in sorted(rep.duals.items()):
        lines.append(f"\\pi_{{{rep.label.code}}}({h.label}^*) = {to_latex(m)}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    try:
        suites = resolve_suites(args.suite)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be a positive integer")
    reports = run_suites(suites, jobs=jobs)
    if args.json:
        json.dump([r.to_json() for r in reports], sys.stdout, indent=2, ensure_ascii=False)
        sys.stdout.write("\n")
    else:
        for r in reports:
            print(r.summary())
        failed = [r for r in reports if not r.passed and not r.informational]
        print(f"{len(reports) - len(failed)} of {len(reports)} relations passed")
    return 0 if all_passed(reports) else 1


def cmd_emit(args) -> int:
    subst = parse_subst(args.subst)
    obj = build_object(args.object)
    if args.object.startswith("rep:"):
        if args.format == "json":
            json.dump(_rep_json(obj), sys.stdout, indent=2)
            sys.stdout.write("\n")
        else:
            print(_rep_latex(obj))
        return 0
    obj = _substitute(obj, subst)
    if args.format == "json":
        json.dump(obj.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(to_latex(obj))
    return 0


def cmd_eval(args) -> int:
    subst = parse_subst(args.subst)
    if set(subst) != {"x", "y"}:
        raise UsageError("eval needs both x=<rational> and y=<rational>")
    if subst["y"] == 0:
        raise UsageError("y must be nonzero (the relations involve x/y)")
    try:
        lhs, rhs = specialized_sides(args.relation, subst["x"], subst["y"])
    except KeyError:
        raise UsageError(
            f"unknown relation {args.relation!r}; expected ybe-parametric:R21|R3p, "
            "lax-universal:2|3 or rll:<L2|L3>:<label>"
        ) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    equal = lhs == rhs
    if args.json:
        json.dump({"lhs": lhs.to_json(), "rhs": rhs.to_json(), "equal": equal}, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print("LHS:")
        print(_plain(lhs))
        print("RHS:")
        print(_plain(rhs))
        print("equal" if equal else "unequal")
    return 0 if equal else 1


def _plain(m) -> str:
    return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in m.entries)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dd3lax", description="Exact verification of universal Lax operators for D(D3)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=SUITES + ("all",))
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $DD3LAX_JOBS or CPU count)")
    p.add_argument("--json", action="store_true", help="emit the report array as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("emit", help="print a constructed object")
    p.add_argument("--object", required=True, help=" | ".join(OBJECTS))
    p.add_argument("--format", default="json", choices=("json", "latex"))
    p.add_argument("--subst", nargs="*", metavar="SYM=VALUE", help="e.g. x=2 y=1/3")
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("eval", help="spot-check a relation at rational points")
    p.add_argument("--relation", required=True)
    p.add_argument("--subst", nargs="*", metavar="SYM=VALUE", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dd3lax: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
