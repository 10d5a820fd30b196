"""Command-line front end.

Subcommands: spectrum, inertia, check, build, delete-edge, verify.  Output is
human-readable by default or JSON with --json; JSON is schema-stable and
byte-identical across runs with identical inputs and seeds.

Exit status: 0 all checks hold; 1 counterexample or violation found; 2 usage
or input error; 3 indeterminate (tolerance event).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import EigenshiftError, FormatError
from .graphs import OperatorKind, build_operator, delete_record, load_graph, normalizer
from .hermitian import (
    HermitianMatrix,
    diagonal_part,
    dump_hmat,
    eigenvalues,
    load_hmat,
    save_hmat,
)
from .inertia import (
    default_tolerance,
    inertia_exact,
    inertia_float,
    pencil_inertia,
    shifted_inertia,
)
from .interlace import (
    RealRootedPoly,
    RelationReport,
    compatible,
    interlaces,
    matrix_shift_dominates,
    shift_dominates_nu,
    shift_dominates_spectral,
)
from .scalars import FIELD_COMPLEX
from .theorems import TheoremId, fuzz

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3


def _load_roots(path) -> RealRootedPoly:
    """First root list of a .roots file (one descending list per line)."""
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                return RealRootedPoly([float(tok) for tok in line.split()])
            except ValueError:
                raise FormatError(str(path), lineno, line, "malformed root list") from None
    raise FormatError(str(path), 1, "", "no root list found")


def _load_input(path):
    name = str(path)
    if name.endswith(".hmat"):
        return load_hmat(path)
    if name.endswith(".graph"):
        return load_graph(path)
    if name.endswith(".roots"):
        return _load_roots(path)
    raise FormatError(name, 1, name, "expected a .hmat, .graph, or .roots file")


def _emit(args, payload: dict, human_lines: list[str]) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for line in human_lines:
            print(line)


def _fmt_vals(values) -> str:
    return " ".join(f"{v:.10g}" for v in values)


def _report_exit(report: RelationReport) -> int:
    if report.indeterminate:
        return EXIT_INDETERMINATE
    return EXIT_OK if report.holds else EXIT_VIOLATION


def _verdict_word(report: RelationReport) -> str:
    if report.indeterminate:
        return "INDETERMINATE"
    return "HOLDS" if report.holds else "VIOLATED"


# -- subcommands -----------------------------------------------------------------


def _operator_matrix(path, kind: str) -> HermitianMatrix:
    data = _load_input(path)
    if isinstance(data, HermitianMatrix):
        return data
    if isinstance(data, RealRootedPoly):
        raise FormatError(str(path), 1, str(path), "root lists have no operator matrix")
    return build_operator(data, kind)


def _cmd_spectrum(args) -> int:
    mat = _operator_matrix(args.file, args.operator)
    spec = eigenvalues(mat)
    tol = args.tol if args.tol is not None else default_tolerance(mat)
    _emit(
        args,
        {
            "command": "spectrum",
            "file": str(args.file),
            "operator": args.operator,
            "tol": tol,
            "eigenvalues": list(spec.values),
        },
        [f"tolerance: {tol:.3e}", _fmt_vals(spec.values)],
    )
    return EXIT_OK


def _cmd_inertia(args) -> int:
    data = _load_input(args.file)
    shift_r = Fraction(args.shift) if args.exact else float(Fraction(args.shift))
    mode = "exact" if args.exact else "float"
    if isinstance(data, RealRootedPoly):
        raise FormatError(str(args.file), 1, str(args.file), "root lists have no inertia")
    if args.pencil_degree:
        if isinstance(data, HermitianMatrix):
            raise FormatError(
                str(args.file), 1, str(args.file), "--pencil-degree needs a graph input"
            )
        lap = build_operator(data, args.operator, as_float=not args.exact)
        deg = diagonal_part(lap)
        result = pencil_inertia(lap, deg, shift_r, mode, args.tol)
        label = f"inertia of L - ({args.shift})*D [{args.operator}]"
    else:
        mat = (
            data
            if isinstance(data, HermitianMatrix)
            else build_operator(data, args.operator, as_float=not args.exact)
        )
        if args.exact and mat.field == FIELD_COMPLEX:
            raise FormatError(
                str(args.file), 1, str(args.file), "--exact requires a q(-1) or q(-3) matrix"
            )
        result = shifted_inertia(mat, shift_r, mode, args.tol)
        label = f"inertia of A - ({args.shift})*I"
    tol = args.tol if args.tol is not None else (0.0 if args.exact else None)
    _emit(
        args,
        {
            "command": "inertia",
            "file": str(args.file),
            "shift": str(args.shift),
            "mode": mode,
            "pencil": bool(args.pencil_degree),
            "inertia": result.to_json(),
        },
        [
            f"{label} ({mode})",
            f"n_plus={result.n_plus} n_minus={result.n_minus} n_zero={result.n_zero}",
        ],
    )
    return EXIT_OK


def _check_reports(a, b, args) -> RelationReport:
    matrices = isinstance(a, HermitianMatrix) and isinstance(b, HermitianMatrix)
    if args.relation is None:
        m = args.m
        if matrices:
            return matrix_shift_dominates(a, b, m, method=args.method, tol=args.tol)
        fa = a if isinstance(a, RealRootedPoly) else RealRootedPoly(eigenvalues(a).values)
        fb = b if isinstance(b, RealRootedPoly) else RealRootedPoly(eigenvalues(b).values)
        if args.method == "spectral":
            return shift_dominates_spectral(fa, fb, m)
        if args.method == "inertia":
            return shift_dominates_nu(fa, fb, m)
        spectral = shift_dominates_spectral(fa, fb, m)
        counting = shift_dominates_nu(fa, fb, m)
        if spectral.holds != counting.holds:
            # exact data: a disagreement is a bug, surface it loudly
            raise EigenshiftError("spectral and counting routes disagree on root lists")
        return spectral
    rel = interlaces if args.relation == "interlace" else compatible
    fa = a if isinstance(a, RealRootedPoly) else RealRootedPoly(eigenvalues(a).values)
    fb = b if isinstance(b, RealRootedPoly) else RealRootedPoly(eigenvalues(b).values)
    return rel(fa, fb)


def _cmd_check(args) -> int:
    a = _load_input(args.a)
    b = _load_input(args.b)
    report = _check_reports(a, b, args)
    tol = args.tol if args.tol is not None else 0.0
    question = (
        f"shift dominance m={args.m}" if args.relation is None else f"relation {args.relation}"
    )
    _emit(
        args,
        {
            "command": "check",
            "a": str(args.a),
            "b": str(args.b),
            "m": args.m,
            "relation": args.relation,
            "method": args.method,
            "tol": tol,
            **report.to_json(),
        },
        [
            f"tolerance: {tol:.3e}",
            f"{question} [{args.method}]: {_verdict_word(report)}"
            + (f" at {report.witness.to_json()}" if report.witness else ""),
        ],
    )
    return _report_exit(report)


def _cmd_build(args) -> int:
    data = _load_input(args.graph)
    if isinstance(data, HermitianMatrix) or isinstance(data, RealRootedPoly):
        raise FormatError(str(args.graph), 1, str(args.graph), "build needs a .graph input")
    mat = build_operator(data, args.operator, as_float=args.float)
    text = dump_hmat(mat)
    if args.output:
        save_hmat(mat, args.output)
        _emit(
            args,
            {"command": "build", "operator": args.operator, "written": str(args.output),
             "n": mat.n, "field": mat.field},
            [f"wrote {args.output} ({mat.n}x{mat.n}, field {mat.field})"],
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_delete_edge(args) -> int:
    data = _load_input(args.graph)
    if not hasattr(data, "records"):
        raise FormatError(str(args.graph), 1, str(args.graph), "delete-edge needs a .graph input")
    kind = args.operator
    base = OperatorKind.BASE_OF.get(kind, kind)
    if base not in OperatorKind.LAPLACIAN_FAMILY:
        raise FormatError(
            str(args.graph), 1, kind, "delete-edge needs a Laplacian-family operator"
        )
    if not (0 <= args.record < len(data.records)):
        raise FormatError(str(args.graph), 1, str(args.record), "record index out of range")
    after_graph = delete_record(data, args.record)
    lap_before = build_operator(data, base)
    lap_after = build_operator(after_graph, base)
    norm_before = normalizer(build_operator(data, base, as_float=True))
    norm_after = normalizer(build_operator(after_graph, base, as_float=True))
    sb, sa = eigenvalues(lap_before), eigenvalues(lap_after)
    nsb, nsa = eigenvalues(norm_before), eigenvalues(norm_after)
    rep_l = interlaces(sa, sb)
    rep_n = compatible(nsa, nsb)
    tol = args.tol if args.tol is not None else default_tolerance(lap_before)
    overall = RelationReport(
        rep_l.holds and rep_n.holds,
        rep_l.witness or rep_n.witness,
        rep_l.indeterminate or rep_n.indeterminate,
    )
    _emit(
        args,
        {
            "command": "delete-edge",
            "graph": str(args.graph),
            "record": args.record,
            "operator": base,
            "tol": tol,
            "laplacian_before": list(sb.values),
            "laplacian_after": list(sa.values),
            "normalized_before": list(nsb.values),
            "normalized_after": list(nsa.values),
            "laplacian_interlaces": rep_l.to_json(),
            "normalized_compatible": rep_n.to_json(),
            "holds": overall.holds,
        },
        [
            f"tolerance: {tol:.3e}",
            f"L before: {_fmt_vals(sb.values)}",
            f"L after:  {_fmt_vals(sa.values)}",
            f"NL before: {_fmt_vals(nsb.values)}",
            f"NL after:  {_fmt_vals(nsa.values)}",
            f"deleted spectrum interlaces original: {_verdict_word(rep_l)}",
            f"normalized spectra compatible: {_verdict_word(rep_n)}",
        ],
    )
    return _report_exit(overall)


def _cmd_verify(args) -> int:
    report = fuzz(args.theorem, args.trials, args.seed, args.size)
    if args.json:
        sys.stdout.write(report.to_json_text())
    else:
        print(f"theorem {report.theorem}: {report.trials} trials, "
              f"{len(report.failures)} failures, {report.indeterminate} indeterminate")
        for fail in report.failures[:5]:
            print(f"  seed {fail.seed}: witness {fail.witness}")
    if report.failures:
        return EXIT_VIOLATION
    if report.indeterminate:
        return EXIT_INDETERMINATE
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenshift",
        description="Eigenvalue shift inequalities via inertia counting, and the graph Laplacian family",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--tol", type=float, default=None, help="float tolerance override")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("spectrum", help="eigenvalues of a matrix or graph operator")
    p.add_argument("file")
    p.add_argument("--operator", default=OperatorKind.LAPLACIAN, choices=OperatorKind.ALL)
    add_common(p)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("inertia", help="inertia of A - r*I (or L - r*D for graphs)")
    p.add_argument("file")
    p.add_argument("--shift", default="0", help="shift r (rational like 3/2, or decimal)")
    p.add_argument("--exact", action="store_true", help="exact route (q-field input, rational r)")
    p.add_argument("--pencil-degree", action="store_true",
                   help="use the diagonal pencil L - r*D of a graph Laplacian")
    p.add_argument("--operator", default=OperatorKind.LAPLACIAN, choices=OperatorKind.ALL)
    add_common(p)
    p.set_defaults(fn=_cmd_inertia)

    p = sub.add_parser("check", help="shift dominance or interlace/compatible relation")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int, default=None, help="index offset of the dominance")
    group.add_argument("--relation", choices=("interlace", "compatible"), default=None)
    p.add_argument("a", metavar="A", help=".hmat or .roots input")
    p.add_argument("b", metavar="B", help=".hmat or .roots input")
    p.add_argument("--method", choices=("spectral", "inertia", "both"), default="both")
    add_common(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("build", help="materialize a graph operator as .hmat")
    p.add_argument("graph")
    p.add_argument("--operator", required=True, choices=OperatorKind.ALL)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--float", action="store_true", help="force floating entries")
    add_common(p)
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("delete-edge", help="spectra before/after one record deletion")
    p.add_argument("graph")
    p.add_argument("--record", type=int, required=True)
    p.add_argument("--operator", default=OperatorKind.LAPLACIAN, choices=OperatorKind.ALL)
    add_common(p)
    p.set_defaults(fn=_cmd_delete_edge)

    p = sub.add_parser("verify", help="fuzz one named statement")
    p.add_argument("theorem", choices=TheoremId.ALL)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=8)
    add_common(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except FormatError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (EigenshiftError, OSError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
