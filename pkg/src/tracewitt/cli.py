"""Command-line surface: check, synthesize, convert, verify, fuzz.

Exit codes: 0 all checks passed, 1 a congruence or synthesis check failed
(a report is printed), 2 malformed input or usage.  ``--format json`` emits
machine-readable output; the default text format prints aligned tables.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction
from typing import Sequence

from .congruences import (
    CharacterTable,
    CongruenceReport,
    InvalidTraceSequenceError,
    check_character,
    check_exterior_congruence,
    check_trace_sequence,
    synthesize,
)
from .matrices import IntMatrix, encode_int, random_matrix, trace_sequence, char_poly_coeffs
from .newton import Scalar
from .rng import SplitMix64
from .witt import ghost_from_witt, witt_from_ghost

OK, MATH_FAIL, INPUT_ERROR = 0, 1, 2


def _parse_ints(text: str) -> tuple[int, ...]:
    values = []
    for token in text.replace(",", " ").split():
        try:
            values.append(int(token))
        except ValueError:
            raise ValueError(f"invalid integer {token!r}") from None
    return tuple(values)


def _parse_rationals(text: str) -> tuple[Scalar, ...]:
    values: list[Scalar] = []
    for token in text.replace(",", " ").split():
        try:
            q = Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"invalid rational {token!r}") from None
        values.append(int(q) if q.denominator == 1 else q)
    return tuple(values)


def _sequence_arg(args, parser) -> str:
    """Resolve the positional/--traces pair; '-' means read stdin."""
    flag = getattr(args, "traces", None)
    positional = getattr(args, "values", None)
    if flag is not None and positional is not None:
        parser.error("give the sequence either positionally or via --traces, not both")
    text = flag if flag is not None else positional
    if text is None:
        parser.error("a sequence is required (positionally, via --traces, or '-' for stdin)")
    if text == "-":
        return sys.stdin.read()
    return text


def _load_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit_json(payload: dict, args) -> None:
    if not args.no_timestamp:
        payload["timestamp"] = datetime.now(timezone.utc).isoformat()
    print(json.dumps(payload, separators=(",", ":")))


def _scalar_text(value: Scalar) -> str:
    return str(value)


def _encode_scalar(value: Scalar):
    q = Fraction(value)
    return encode_int(int(q)) if q.denominator == 1 else str(q)


def _emit_values(values: Sequence[Scalar], args) -> None:
    if args.format == "json":
        _emit_json({"values": [_encode_scalar(v) for v in values]}, args)
    else:
        print(",".join(_scalar_text(v) for v in values))


def _policy_text(policy: dict) -> str:
    parts = []
    for key, value in policy.items():
        if isinstance(value, dict):
            inner = ",".join(f"{k}:{v}" for k, v in value.items())
            parts.append(f"{key}={{{inner}}}")
        else:
            parts.append(f"{key}={value}")
    return " ".join(parts)


def _report_text(report: CongruenceReport) -> str:
    kind = report.policy.get("kind", "")
    if kind == "trace-sequence":
        headers = ("n", "p^k", "b_n", "b_{n/p}", "diff", "verdict")
    else:
        headers = ("n", "p^k", "lhs", "rhs", "diff", "verdict")
    table = [headers]
    for row in report.checks:
        table.append(
            (
                str(row.n),
                f"{row.p}^{row.k}",
                str(row.lhs),
                str(row.rhs),
                str(row.lhs - row.rhs),
                "PASS" if row.passed else "FAIL",
            )
        )
    widths = [max(len(line[col]) for line in table) for col in range(len(headers))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in table]
    failed = len(report.failures())
    verdict = "PASS" if report.overall else f"FAIL ({failed} of {len(report.checks)} checks)"
    lines.append(f"overall: {verdict}")
    if report.policy:
        lines.append(f"policy: {_policy_text(report.policy)}")
    if report.witness is not None:
        lines.append("witness: " + ",".join(str(x) for x in report.witness))
    return "\n".join(lines)


def _emit_report(report: CongruenceReport, args, stream=None) -> None:
    stream = stream or sys.stdout
    if args.format == "json":
        payload = report.to_json_dict()
        if not args.no_timestamp:
            payload["timestamp"] = datetime.now(timezone.utc).isoformat()
        print(json.dumps(payload, separators=(",", ":")), file=stream)
    else:
        print(_report_text(report), file=stream)


def _emit_matrix(matrix: IntMatrix) -> None:
    print(json.dumps(matrix.to_json_dict(), separators=(",", ":")))


def cmd_check_traces(args, parser) -> int:
    traces = _parse_ints(_sequence_arg(args, parser))
    report = check_trace_sequence(traces)
    _emit_report(report, args)
    return OK if report.overall else MATH_FAIL


def cmd_synthesize(args, parser) -> int:
    traces = _parse_ints(_sequence_arg(args, parser))
    try:
        matrix = synthesize(traces, self_check=not args.no_self_check)
    except InvalidTraceSequenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit_report(exc.report, args)
        return MATH_FAIL
    _emit_matrix(matrix)
    return OK


def cmd_traces(args, parser) -> int:
    if args.count < 0:
        parser.error("--count must be non-negative")
    matrix = IntMatrix.from_json_dict(_load_json(args.matrix))
    _emit_values(trace_sequence(matrix, args.count), args)
    return OK


def cmd_charpoly(args, parser) -> int:
    matrix = IntMatrix.from_json_dict(_load_json(args.matrix))
    _emit_values(char_poly_coeffs(matrix), args)
    return OK


def cmd_witt(args, parser) -> int:
    traces = _parse_ints(_sequence_arg(args, parser))
    _emit_values(witt_from_ghost(traces), args)
    return OK


def cmd_ghost(args, parser) -> int:
    if args.count < 0:
        parser.error("--count must be non-negative")
    witt = _parse_rationals(_sequence_arg(args, parser))
    _emit_values(ghost_from_witt(witt, args.count), args)
    return OK


def cmd_check_character(args, parser) -> int:
    table = CharacterTable.from_json_dict(_load_json(args.table))
    report = check_character(table, k_max=args.kmax)
    _emit_report(report, args)
    return OK if report.overall else MATH_FAIL


def cmd_check_exterior(args, parser) -> int:
    matrix = IntMatrix.from_json_dict(_load_json(args.matrix))
    rows = []
    for k in range(1, args.kmax + 1):
        rows.extend(check_exterior_congruence(matrix, args.prime, k).checks)
    report = CongruenceReport(
        tuple(rows),
        {"kind": "exterior-power", "p": args.prime, "k_max": args.kmax, "dim": matrix.dim},
    )
    _emit_report(report, args)
    return OK if report.overall else MATH_FAIL


def run_fuzz(trials: int, dim: int, entry_bound: int, seed: int) -> dict:
    """Random-matrix oracle run; any violation means a bug somewhere."""
    master = SplitMix64(seed)
    trial_seeds = [master.next_u64() for _ in range(trials)]
    trace_rows = 0
    exterior_rows = 0
    violations = []
    for index, trial_seed in enumerate(trial_seeds):
        matrix = random_matrix(dim, entry_bound, trial_seed)
        report = check_trace_sequence(trace_sequence(matrix, 4 * dim))
        trace_rows += len(report.checks)
        for row in report.failures():
            violations.append({"trial": index, "kind": "trace", "n": row.n, "p": row.p})
        if 1 <= dim <= 4:
            for p in (2, 3):
                for k in (1, 2):
                    report = check_exterior_congruence(matrix, p, k)
                    exterior_rows += len(report.checks)
                    for row in report.failures():
                        violations.append(
                            {"trial": index, "kind": "exterior", "n": row.n, "p": row.p}
                        )
    return {
        "trials": trials,
        "dim": dim,
        "entry_bound": entry_bound,
        "seed": seed,
        "trace_checks": trace_rows,
        "exterior_checks": exterior_rows,
        "violations": violations,
        "ok": not violations,
    }


def cmd_fuzz(args, parser) -> int:
    if args.trials < 1:
        parser.error("--trials must be at least 1")
    if args.dim < 0:
        parser.error("--dim must be non-negative")
    if args.entry_bound < 1:
        parser.error("--entry-bound must be at least 1")
    summary = run_fuzz(args.trials, args.dim, args.entry_bound, args.seed)
    if args.format == "json":
        _emit_json(summary, args)
    else:
        for key in ("trials", "dim", "entry_bound", "seed", "trace_checks", "exterior_checks"):
            print(f"{key}: {summary[key]}")
        print(f"violations: {len(summary['violations'])}")
        for item in summary["violations"]:
            print(f"  {item}")
    return OK if summary["ok"] else MATH_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--no-timestamp", action="store_true", help="omit timestamps from JSON output")
    common.add_argument("--seed", type=int, default=0, help="PRNG seed for randomized commands")

    parser = argparse.ArgumentParser(
        prog="tracewitt",
        description="Decide, synthesize and transform integer trace sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def sequence_command(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("values", nargs="?", help="comma-separated values ('-' for stdin)")
        p.add_argument("--traces", help="comma-separated values ('-' for stdin)")
        p.set_defaults(func=func)
        return p

    sequence_command("check-traces", cmd_check_traces, "check the trace-sequence congruences")
    syn = sequence_command("synthesize", cmd_synthesize, "build a witness matrix for a sequence")
    syn.add_argument("--no-self-check", action="store_true", help="skip recomputing traces of the result")
    sequence_command("witt", cmd_witt, "Witt coordinates of a trace sequence")
    ghost = sequence_command("ghost", cmd_ghost, "ghost components of Witt coordinates (rationals allowed)")
    ghost.add_argument("--count", type=int, required=True, help="number of components to produce")

    tr = sub.add_parser("traces", parents=[common], help="traces of powers of a matrix")
    tr.add_argument("matrix", help="matrix JSON file ('-' for stdin)")
    tr.add_argument("--count", type=int, required=True, help="number of traces to produce")
    tr.set_defaults(func=cmd_traces)

    cp = sub.add_parser("charpoly", parents=[common], help="characteristic coefficients of det(1+tf)")
    cp.add_argument("matrix", help="matrix JSON file ('-' for stdin)")
    cp.set_defaults(func=cmd_charpoly)

    cc = sub.add_parser("check-character", parents=[common], help="check a character table's congruences")
    cc.add_argument("table", help="character table JSON file ('-' for stdin)")
    cc.add_argument("--kmax", type=int, default=None, help="cap the exponent bound per prime")
    cc.set_defaults(func=cmd_check_character)

    ce = sub.add_parser("check-exterior", parents=[common], help="check exterior-power congruences of a matrix")
    ce.add_argument("matrix", help="matrix JSON file ('-' for stdin)")
    ce.add_argument("--prime", type=int, required=True)
    ce.add_argument("--kmax", type=int, default=1)
    ce.set_defaults(func=cmd_check_exterior)

    fz = sub.add_parser("fuzz", parents=[common], help="random-matrix oracle run")
    fz.add_argument("--trials", type=int, default=100)
    fz.add_argument("--dim", type=int, default=4)
    fz.add_argument("--entry-bound", type=int, default=3)
    fz.set_defaults(func=cmd_fuzz)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
