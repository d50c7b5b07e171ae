"""Command-line front end.

Exit codes: 0 for a positive certificate (or a completed report), 1 for a
negative or inconclusive result, 2 for bad input or an exceeded cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from heegaard_cert.errors import InputError, ResourceLimitError
from heegaard_cert.heegaard import (
    DEFAULT_MAX_GENERATORS,
    HeegaardDiagram,
    algebraic_matrix,
    count_matrix,
    gen_lens,
    generators,
    presentation_of,
    strong_report,
)
from heegaard_cert.intmat import bareiss_det
from heegaard_cert.matchings import recognize_s3
from heegaard_cert.orderability import (
    DEFAULT_MAX_BRUTEFORCE_ROWS,
    check_lemma_matrix,
    check_notlo_bruteforce,
    column_is_uniform,
    scale_rows,
)
from heegaard_cert.presentation import Presentation, epsilon_matrix
from heegaard_cert.signs import DEFAULT_MAX_PERM_N, SignMatrix

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def load_diagram(path: str) -> HeegaardDiagram:
    return HeegaardDiagram.loads(_read(path))


def load_sign_matrix(path: str) -> tuple[SignMatrix, Optional[Presentation]]:
    """A sign matrix file, or a presentation file (first line ``gens m``) turned into its sign matrix."""
    text = _read(path)
    if text.lstrip().startswith("gens"):
        p = Presentation.parse(text)
        return epsilon_matrix(p), p
    return SignMatrix.parse(text), None


def _rows(m: SignMatrix) -> list[str]:
    return [" ".join(s.value for s in m.row(i)) for i in range(m.rows)]


def _generator_dict(gen) -> dict:
    return {
        "sigma": [j + 1 for j in gen.sigma],
        "points": [k + 1 for k in gen.choices],
        "grading": gen.grading,
    }


def analyze_report(h: HeegaardDiagram, args: argparse.Namespace) -> dict:
    gens = generators(h, args.max_generators)
    report = strong_report(h, gens)
    pres = presentation_of(h)
    eps = epsilon_matrix(pres)
    verdict = check_lemma_matrix(eps, max_n=args.max_perm_n)
    out = {
        "command": "analyze",
        "diagram": h.to_dict(),
        "presentation": pres.format().splitlines(),
        "count_matrix": count_matrix(h),
        "algebraic_matrix": algebraic_matrix(h),
        "determinant": bareiss_det(algebraic_matrix(h)),
        "generators": [_generator_dict(g) for g in gens],
        "strong": report.to_dict(),
        "epsilon_matrix": _rows(eps),
        "orderability": verdict.to_dict(),
    }
    if report.is_strong and report.h1_order == 1:
        out["s3"] = recognize_s3(h, args.max_generators).to_dict()
    return out


def cmd_analyze(args: argparse.Namespace) -> tuple[dict, int]:
    return analyze_report(load_diagram(args.file), args), EXIT_OK


def cmd_check_strong(args: argparse.Namespace) -> tuple[dict, int]:
    h = load_diagram(args.file)
    report = strong_report(h, generators(h, args.max_generators))
    return {"command": "check-strong", "strong": report.to_dict()}, EXIT_OK if report.is_strong else EXIT_NEGATIVE


def _column_analysis(m: SignMatrix) -> list[dict]:
    return [
        {"column": j + 1, "entries": " ".join(s.value for s in m.column(j)), "uniform": column_is_uniform(m.column(j))}
        for j in range(m.cols)
    ]


def cmd_check_lo(args: argparse.Namespace) -> tuple[dict, int]:
    m, pres = load_sign_matrix(args.file)
    out: dict = {"command": "check-lo", "mode": args.mode, "matrix": _rows(m)}
    if pres is not None:
        out["presentation"] = pres.format().splitlines()
    if args.mode == "det":
        if not m.is_square:
            raise InputError(f"det mode needs a square matrix, got {m.rows}x{m.cols}")
        verdict = check_lemma_matrix(m, max_n=args.max_perm_n)
        out["orderability"] = verdict.to_dict()
        return out, EXIT_OK if verdict.not_left_orderable else EXIT_NEGATIVE
    result = check_notlo_bruteforce(m, max_rows=args.max_bruteforce_rows)
    out["bruteforce"] = {
        "holds": result.holds,
        "witness": None if result.witness is None else [s.value for s in result.witness],
        "scalings_checked": result.scalings_checked,
    }
    out["columns"] = _column_analysis(m)
    if result.witness is not None:
        out["witness_columns"] = _column_analysis(scale_rows(m, result.witness))
    return out, EXIT_OK if result.holds else EXIT_NEGATIVE


def cmd_recognize_s3(args: argparse.Namespace) -> tuple[dict, int]:
    verdict = recognize_s3(load_diagram(args.file), args.max_generators)
    out = {"command": "recognize-s3", "s3": verdict.to_dict()}
    if verdict.strong is not None:
        out["strong"] = verdict.strong.to_dict()
    return out, EXIT_OK if verdict.is_s3 else EXIT_NEGATIVE


def cmd_gen(args: argparse.Namespace) -> tuple[dict, int]:
    h = gen_lens(args.p, args.q)
    text = h.dumps()
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc}") from None
    return {"command": "gen", "family": "lens", "diagram": h.to_dict(), "output": args.output}, EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> tuple[dict, int]:
    h = load_diagram(args.file)
    a = algebraic_matrix(h)
    return {
        "command": "matrix",
        "count_matrix": count_matrix(h),
        "algebraic_matrix": a,
        "determinant": bareiss_det(a),
        "permanent": len(generators(h, args.max_generators)),
    }, EXIT_OK


def _fmt_matrix(rows) -> list[str]:
    return ["    " + " ".join(f"{x:>3}" if isinstance(x, int) else str(x) for x in row) if isinstance(row, list) else "    " + row for row in rows]


def render_text(out: dict) -> str:
    lines = []
    for key, value in out.items():
        if key == "command":
            continue
        if isinstance(value, list) and value and isinstance(value[0], (list, str)) and key != "trace":
            lines.append(f"{key}:")
            lines.extend(_fmt_matrix(value))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for item in value:
                lines.append("    " + ", ".join(f"{k}={v}" for k, v in item.items()))
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            for k, v in value.items():
                lines.append(f"    {k}: {v}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-generators", type=_positive_int, default=DEFAULT_MAX_GENERATORS,
                        help="cap on Floer generators / perfect matchings (default %(default)s)")
    common.add_argument("--max-perm-n", type=_positive_int, default=DEFAULT_MAX_PERM_N,
                        help="largest matrix size for the formal determinant (default %(default)s)")
    common.add_argument("--max-bruteforce-rows", type=_positive_int, default=DEFAULT_MAX_BRUTEFORCE_ROWS,
                        help="largest row count for the 3^m scaling search (default %(default)s)")

    parser = argparse.ArgumentParser(prog="heegaard-cert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("analyze", cmd_analyze, "full report for a diagram file").add_argument("file")
    add("check-strong", cmd_check_strong, "is the diagram strong?").add_argument("file")
    p = add("check-lo", cmd_check_lo, "non-left-orderability criteria on a sign matrix or presentation")
    p.add_argument("file")
    p.add_argument("--mode", choices=("det", "bruteforce"), default="det")
    add("recognize-s3", cmd_recognize_s3, "S^3 recognition for strong diagrams").add_argument("file")
    p = add("gen", cmd_gen, "generate a diagram")
    p.add_argument("family", choices=("lens",))
    p.add_argument("p", type=int)
    p.add_argument("-q", type=int, default=None, help="lens space q, recorded as a label only")
    p.add_argument("-o", "--output", default=None)
    add("matrix", cmd_matrix, "intersection matrices, determinant and permanent").add_argument("file")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except ResourceLimitError as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.command == "gen" and args.output is None and args.format == "text":
        sys.stdout.write(HeegaardDiagram.from_dict(out["diagram"]).dumps())
    elif args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(render_text(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
