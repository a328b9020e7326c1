"""Command-line interface.

One binary with subcommands; configuration happens through flags only so
that reported results are reproducible.  Output is JSON on stdout by
default, human-readable with --pretty.  Exit codes: 0 success, 1 usage
error, 2 property violation or failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus as corpus_mod
from . import verification
from .core import (ContractError, InconclusiveError, PropertyViolation,
                   as_rational, format_rational)
from .forms import BivariateForm, from_factors
from .hessian import (enumerate_path_systems, mixed_hessian_permuted,
                      path_minor, path_system_ascii, plucker_determinant,
                      specialize_path_minor)
from .lorentzian import lorentzian_chain
from .minor_expansion import alpha_statistic, expand_minor
from .schur import jacobi_trudi_eval, schur_eval
from .tableaux import SkewShape, as_partition, enumerate_lr_tableaux
from .toeplitz import build

USAGE_ERROR = 1
PROPERTY_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _read_form(path: str) -> BivariateForm:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ContractError(f"input is not valid JSON: {exc}") from exc
    if "roots" in obj:
        return from_factors([as_rational(r) for r in obj["roots"]],
                            int(obj.get("extra_x", 0)),
                            int(obj.get("extra_y", 0)))
    return BivariateForm.from_json_obj(obj)


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def _emit(obj, pretty_text: str | None, args) -> None:
    if args.pretty and pretty_text is not None:
        print(pretty_text)
    else:
        print(json.dumps(obj, indent=2 if args.pretty else None))


def _add_common(parser: argparse.ArgumentParser, ascii_flag: bool = False):
    parser.add_argument("--pretty", action="store_true",
                        help="human-readable output instead of compact JSON")
    parser.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker threads (accepted for compatibility; "
                             "all computations are deterministic)")
    if ascii_flag:
        parser.add_argument("--ascii", action="store_true",
                            help="include plain-text diagrams")


def _cmd_toeplitz(args) -> int:
    form = _read_form(args.input)
    matrix = build(form, args.index)
    _emit(matrix.to_json_obj(), str(matrix), args)
    return 0


def _cmd_lr(args) -> int:
    outer = as_partition(_parse_int_list(args.outer))
    inner = as_partition(_parse_int_list(args.inner) if args.inner else (),
                         len(outer))
    shape = SkewShape(outer, inner)
    tableaux = list(enumerate_lr_tableaux(shape))
    counts: dict[tuple, int] = {}
    for t in tableaux:
        c = t.content(length=shape.n_rows)
        counts[c] = counts.get(c, 0) + 1
    obj = {
        "outer": list(outer), "inner": list(inner),
        "tableaux": [[list(row) for row in t.rows] for t in tableaux],
        "contents": [list(t.content(length=shape.n_rows)) for t in tableaux],
        "coefficients": [{"content": list(c), "coefficient": n}
                         for c, n in sorted(counts.items(), reverse=True)],
    }
    lines = [f"{len(tableaux)} Littlewood-Richardson tableaux of shape "
             f"{list(outer)}/{list(inner)}"]
    for t in tableaux:
        lines.append("")
        lines.append(shape.ascii_diagram(t.rows) if args.ascii
                     else f"content {list(t.content(length=shape.n_rows))}: "
                          f"{[list(r) for r in t.rows]}")
    _emit(obj, "\n".join(lines), args)
    return 0


def _cmd_schur(args) -> int:
    outer = as_partition(_parse_int_list(args.outer))
    inner = as_partition(_parse_int_list(args.inner) if args.inner else (),
                         len(outer))
    shape = SkewShape(outer, inner)
    point = tuple(as_rational(v) for v in args.point.split(","))
    obj: dict = {"outer": list(outer), "inner": list(inner),
                 "point": [format_rational(x) for x in point]}
    if args.mode in ("tableaux", "both"):
        obj["tableaux_value"] = format_rational(schur_eval(shape, point))
    if args.mode in ("jacobi-trudi", "both"):
        obj["jacobi_trudi_value"] = format_rational(
            jacobi_trudi_eval(shape, point))
    if args.mode == "both" and obj["tableaux_value"] != obj["jacobi_trudi_value"]:
        _emit(obj, None, args)
        return PROPERTY_ERROR
    text = ", ".join(f"{k} = {v}" for k, v in obj.items()
                     if k.endswith("value"))
    _emit(obj, text, args)
    return 0


def _cmd_minor_expand(args) -> int:
    form = _read_form(args.input)
    rows = _parse_int_list(args.rows)
    cols = _parse_int_list(args.cols)
    expansion = expand_minor(form, args.index, args.r, rows, cols)
    obj = expansion.to_json_obj()
    lines = [f"minor rows={list(rows)} cols={list(cols)} of level {args.index} "
             f"= {obj['lhs']}"]
    for term in expansion.terms:
        lines.append(f"  + {term.coefficient} * minor K={list(term.cols)} "
                     f"(= {format_rational(term.minor_value)}, alpha = "
                     f"{term.alpha})")
    _emit(obj, "\n".join(lines), args)
    return 0


def _cmd_hessian(args) -> int:
    form = _read_form(args.input)
    r = args.r
    d = form.degree
    matrix = mixed_hessian_permuted(form, r)
    determinant = plucker_determinant(form, r)
    table = []
    lines = [f"permuted mixed Hessian of order {r} (degree {d}):"]
    lines += ["  " + " | ".join(str(e) for e in row) for row in matrix]
    lines.append(f"determinant = {determinant}")
    from itertools import combinations
    for cols in combinations(range(d - r + 1), r + 1):
        weight_sum = path_minor(cols, r, d)
        entry = {"K": list(cols),
                 "K_plus_r": [k + r for k in cols],
                 "path_minor": weight_sum.to_json_obj()}
        text = f"K={list(cols)}: {weight_sum}"
        if args.index is not None:
            entry["alpha"] = alpha_statistic(cols, args.index, r)
            text += f"  alpha={entry['alpha']}"
            specialized = specialize_path_minor(cols, r, args.index, d)
            if args.t is not None:
                value = specialized.evaluate({"t": as_rational(args.t)})
                entry["specialized_value"] = format_rational(value)
                text += f"  value(t={args.t})={entry['specialized_value']}"
            else:
                entry["specialized"] = specialized.to_json_obj()
        table.append(entry)
        lines.append(text)
    obj = {"degree": d, "r": r,
           "matrix": [[e.to_json_obj() for e in row] for row in matrix],
           "determinant": determinant.to_json_obj(),
           "per_column_set": table}
    if args.ascii:
        diagrams = []
        for cols in combinations(range(d - r + 1), r + 1):
            for system in enumerate_path_systems(cols, r, d):
                diagrams.append(f"K={list(cols)} monomial "
                                f"{system.monomial()}:\n"
                                f"{path_system_ascii(system)}")
                break  # one representative system per column set
        obj["diagrams"] = diagrams
        lines += ["", *diagrams]
    _emit(obj, "\n".join(lines), args)
    return 0


def _cmd_classify(args) -> int:
    form = _read_form(args.input)
    report = lorentzian_chain(form, cross_check=args.cross_check,
                              seed=args.seed)
    obj = report.to_json_obj()
    lines = [f"degree {report.degree}, Sperner number {report.sperner}",
             f"max level: {report.max_lorentzian_index}",
             f"normally stable: {report.normally_stable}"]
    for verdict in report.verdicts:
        lines.append(f"  level {verdict.i}: "
                     f"{'member' if verdict.member else 'not a member'}")
    _emit(obj, "\n".join(lines), args)
    return 0


def _cmd_corpus(args) -> int:
    spec = corpus_mod.CorpusSpec(seed=args.seed)
    forms = corpus_mod.generate(spec)
    print(corpus_mod.serialize_corpus(forms))
    return 0


def _cmd_verify_suite(args) -> int:
    results = verification.run_suite(seed=args.seed,
                                     paper_examples_only=args.paper_examples)
    all_ok = all(r.passed for r in results)
    obj = {"seed": args.seed, "all_passed": all_ok,
           "checks": [r.to_json_obj() for r in results]}
    lines = []
    for r in results:
        lines.append(f"{r.status.upper():14s} {r.name} ({r.seconds:.2f}s)")
        if not r.passed:
            lines.append(f"    {json.dumps(r.details)}")
    lines.append("all passed" if all_ok else "FAILURES present")
    _emit(obj, "\n".join(lines), args)
    return 0 if all_ok else PROPERTY_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tnforms",
                     description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("toeplitz", help="print a band matrix of a form")
    p.add_argument("--input", required=True, metavar="FILE|-",
                   help='form JSON {"degree":d,"coeffs":[...]} or '
                        '{"roots":[...],"extra_x":a,"extra_y":b}')
    p.add_argument("-i", "--index", type=int, required=True,
                   help="band index (0 <= i <= d)")
    _add_common(p)
    p.set_defaults(func=_cmd_toeplitz)

    p = sub.add_parser("lr", help="Littlewood-Richardson tableaux of a shape")
    p.add_argument("--outer", required=True, help="comma list, e.g. 7,7,6")
    p.add_argument("--inner", default="", help="comma list, e.g. 5,2,1")
    _add_common(p, ascii_flag=True)
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("schur", help="evaluate a (skew) Schur polynomial")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", default="")
    p.add_argument("--point", required=True, help="comma list of rationals")
    p.add_argument("--mode", choices=("tableaux", "jacobi-trudi", "both"),
                   default="both")
    _add_common(p)
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("minor-expand",
                       help="expand a band minor over a shorter band")
    p.add_argument("--input", required=True, metavar="FILE|-")
    p.add_argument("-i", "--index", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--rows", required=True, help="comma list")
    p.add_argument("--cols", required=True, help="comma list")
    _add_common(p)
    p.set_defaults(func=_cmd_minor_expand)

    p = sub.add_parser("hessian",
                       help="permuted mixed Hessian and its expansion table")
    p.add_argument("--input", required=True, metavar="FILE|-")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-i", "--index", type=int, default=None,
                   help="also report alpha statistics and t-specializations")
    p.add_argument("--t", default=None, help="evaluate specializations at t")
    _add_common(p, ascii_flag=True)
    p.set_defaults(func=_cmd_hessian)

    p = sub.add_parser("classify", help="level-by-level classification")
    p.add_argument("--input", required=True, metavar="FILE|-")
    p.add_argument("--cross-check", action="store_true",
                   help="also verify the strong test and the Hessian "
                        "positivity certificate and demand agreement")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("corpus", help="emit the deterministic fixture corpus")
    p.add_argument("--seed", type=int, default=20240)
    _add_common(p)
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("verify-suite", help="run the full verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--paper-examples", action="store_true",
                   help="only replay the built-in worked examples")
    _add_common(p)
    p.set_defaults(func=_cmd_verify_suite)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ContractError, FileNotFoundError) as exc:
        print(f"tnforms: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (PropertyViolation, InconclusiveError) as exc:
        print(f"tnforms: property violation: {exc}", file=sys.stderr)
        return PROPERTY_ERROR


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
