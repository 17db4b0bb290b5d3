"""Command-line front end.

Exit codes: 0 success, 1 for a negative answer to a decision verb
(``as-solve`` absent, ``class-eq`` false, ``diagram-check`` false,
``selftest`` failure), 2 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arf, checks
from .cokernel import ASClass, make_class
from .errors import ArfError, ContextMismatch, ParseError
from .formats import load_form, matrix_to_json, parse_element, parse_field_spec, vector_to_json
from .func_field import TowerElem, TowerField, format_ratfunc, format_tower, lemma0_descend, parse_tower
from .gf2n import BinaryField
from .quadform import symplectic_basis

VERBS = ("arf", "parf", "symplectic", "witt", "as-solve", "class-eq", "descend", "diagram-check", "selftest")

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arfinv", description="Arf invariants of quadratic forms in characteristic 2.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--field", help="gf2:<n>:<modulus>, f2t or f2t-tower:<m>")
    p.add_argument("--form", help="JSON form file")
    p.add_argument("--expr", action="append", default=[], help="element expression (repeat for class-eq)")
    p.add_argument("--level", type=int, help="tower level for diagram-check")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true", help="selftest with reduced sample counts")
    p.add_argument("--inject-modulus", type=int, help=argparse.SUPPRESS)
    return p


def _class_json(c: ASClass):
    F = c.field
    out = {"class": F.elem_to_json(c.rep), "trivial": c.is_zero()}
    if isinstance(F, BinaryField):
        out["bit"] = c.bit
    return out


def _form(args):
    if not args.form:
        raise ParseError(f"{args.verb} needs --form")
    q = load_form(args.form)
    if args.field and parse_field_spec(args.field) != q.field:
        raise ContextMismatch(f"--field {args.field} disagrees with form field {q.field.spec}")
    return q


def _field(args):
    if not args.field:
        raise ParseError(f"{args.verb} needs --field")
    return parse_field_spec(args.field)


def _exprs(args, k):
    if len(args.expr) != k:
        raise ParseError(f"{args.verb} takes exactly {k} --expr, got {len(args.expr)}")
    return args.expr


def run(args) -> tuple[int, dict]:
    verb = args.verb
    report = {"verb": verb, "field": None, "result": None, "witnesses": {}}
    code = EXIT_OK

    if verb == "arf":
        q = _form(args)
        S = symplectic_basis(q)
        s = arf.arf_sum(q, S)
        report["field"] = q.field.spec
        report["result"] = _class_json(make_class(q.field, s))
        report["witnesses"] = {"arf_sum": q.field.elem_to_json(s), "symplectic_basis": matrix_to_json(q.field, S.matrix)}

    elif verb == "parf":
        q = _form(args)
        L = arf.symplectic_lagrangian(q)
        w = arf.wu_vector(q, L)
        report["field"] = q.field.spec
        report["result"] = _class_json(arf.parf(q))
        report["witnesses"] = {
            "lagrangian": matrix_to_json(q.field, L.basis),
            "wu_vector": vector_to_json(q.field, w.vector),
            "q_wu": q.field.elem_to_json(q(list(w.vector))),
        }

    elif verb == "symplectic":
        q = _form(args)
        report["field"] = q.field.spec
        report["result"] = matrix_to_json(q.field, symplectic_basis(q).matrix)

    elif verb == "witt":
        q = _form(args)
        wc = arf.witt_class(q)
        dec = arf.witt_decompose(q)
        report["field"] = q.field.spec
        report["result"] = {"arf_bit": wc.arf_bit, "n_residue": wc.n_residue, "hyperbolic_count": dec.hyperbolic_count}
        F = q.field
        report["witnesses"] = {
            "anisotropic": {
                "gram": matrix_to_json(F, dec.anisotropic.gram),
                "diag": vector_to_json(F, dec.anisotropic.diag),
            }
        }

    elif verb == "as-solve":
        F = _field(args)
        (e,) = _exprs(args, 1)
        a = parse_element(F, e)
        x = F.as_solve(a)
        report["field"] = F.spec
        report["result"] = None if x is None else F.elem_to_json(x)
        if x is None:
            code = EXIT_NEGATIVE
        else:
            report["witnesses"] = {"other_solution": F.elem_to_json(F.add(x, F.one))}

    elif verb == "class-eq":
        F = _field(args)
        a, b = (parse_element(F, e) for e in _exprs(args, 2))
        diff = F.add(a, b)
        x = F.as_solve(diff)
        report["field"] = F.spec
        report["result"] = x is not None
        if x is None:
            code = EXIT_NEGATIVE
        else:
            report["witnesses"] = {"difference_preimage": F.elem_to_json(x)}

    elif verb == "descend":
        (e,) = _exprs(args, 1)
        x = _tower_arg(args, e)
        y, w = lemma0_descend(x)
        report["field"] = TowerField(x.level).spec
        report["result"] = format_ratfunc(y, "t")
        report["witnesses"] = {"height": x.level, "w": format_tower(w)}

    elif verb == "diagram-check":
        q = _form(args)
        if args.level is None:
            raise ParseError("diagram-check needs --level")
        ok = arf.arf_diagram_check(q, args.level)
        report["field"] = q.field.spec
        report["result"] = ok
        report["witnesses"] = {"arf": _class_json(arf.arf_invariant(q)), "level": args.level}
        if not ok:
            code = EXIT_NEGATIVE

    elif verb == "selftest":
        contexts = None
        if args.inject_modulus is not None:
            n = args.inject_modulus.bit_length() - 1
            contexts = [BinaryField(n, args.inject_modulus, validate=False)]
        suites = checks.run_suites(args.seed, 0.1 if args.quick else 1.0, contexts)
        table = {
            name: [{"check": r.name, "passed": r.passed, "cases": r.cases, "detail": r.detail} for r in suites[name]]
            for name in checks.SUITE_ORDER
        }
        passed = all(r["passed"] for rows in table.values() for r in rows)
        report["result"] = passed
        report["witnesses"] = {"seed": args.seed, "suites": table}
        if not passed:
            code = EXIT_NEGATIVE

    return code, report


def _tower_arg(args, e: str) -> TowerElem:
    if e.strip().startswith("level"):
        return parse_tower(e)
    F = _field(args)
    if not isinstance(F, TowerField):
        raise ContextMismatch(f"descend needs a tower field, got {F.spec}")
    return parse_element(F, e)


def render_text(report: dict) -> str:
    if report["verb"] == "selftest":
        lines = []
        for suite, rows in report["witnesses"]["suites"].items():
            for r in rows:
                status = "PASS" if r["passed"] else "FAIL"
                detail = f"  {r['detail']}" if r["detail"] else ""
                lines.append(f"{status}  {suite:<16} {r['check']:<32} {r['cases']:>8}{detail}")
        lines.append("ALL PASS" if report["result"] else "FAILURES")
        return "\n".join(lines)
    lines = [f"verb: {report['verb']}"]
    if report["field"]:
        lines.append(f"field: {report['field']}")
    lines.append(f"result: {json.dumps(report['result'], ensure_ascii=False)}")
    for k, v in report["witnesses"].items():
        lines.append(f"{k}: {json.dumps(v, ensure_ascii=False)}")
    return "\n".join(lines)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report = run(args)
    except ArfError as e:
        err = {"verb": args.verb, "error": e.code, "message": str(e)}
        if args.format == "json":
            print(json.dumps(err, ensure_ascii=False))
        else:
            print(f"error [{e.code}]: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError, ZeroDivisionError) as e:
        if args.format == "json":
            print(json.dumps({"verb": args.verb, "error": "error", "message": str(e)}))
        else:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    if args.format == "json":
        print(json.dumps(report, ensure_ascii=False, sort_keys=False))
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
