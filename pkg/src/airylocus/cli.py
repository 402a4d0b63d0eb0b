"""Command-line front end.

Subcommands: critical-value tables, eigenvalue sweeps, trajectory and curve
exports, and the built-in verification suite.  Output is CSV (17 significant
digits, comma separator, LF endings) or JSON with a versioned envelope.
Identical command lines produce byte-identical data output.  No environment
variables are consumed; behavior is controlled by flags alone.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .airy import SQRT3
from .curves import trace_gamma, trace_lambda
from .exceptions import AiryLocusError
from .locus import eigenvalues
from .verify import SCHEMA_VERSION, run_verification
from .zeros import critical_pairs

__all__ = ["main"]

_MARKER_NAMES = ((-SQRT3, "alpha"), (0.0, "z"), (SQRT3, "beta"))


def _g(x: float) -> str:
    return f"{x:.17g}"


def _emit(rows: list[dict], header: list[str], fmt: str, produced_by: str,
          out: str | None) -> None:
    """Write rows as CSV or a JSON envelope, to a file or stdout."""
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "produced_by": produced_by,
            "payload": rows,
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [",".join(header)]
        for row in rows:
            cells = []
            for col in header:
                v = row[col]
                cells.append(_g(v) if isinstance(v, float) else str(v))
            lines.append(",".join(cells))
        text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _cmd_critical(args, fmt: str) -> int:
    if not 1 <= args.count <= 10:
        print(f"critical: --count must be in 1..10, got {args.count}",
              file=sys.stderr)
        return 2
    pairs = critical_pairs(args.count)
    rows = [
        {
            "k": p.k,
            "beta_abs": p.beta.modulus,
            "alpha_abs": p.alpha.modulus,
            "delta_k": p.delta_k,
            "eps_k": p.eps_k,
            "knot": p.knot,
        }
        for p in pairs
    ]
    _emit(rows, ["k", "beta_abs", "alpha_abs", "delta_k", "eps_k", "knot"],
          fmt, f"critical --count {args.count}", args.out)
    return 0


def _cmd_eigenvalues(args, fmt: str) -> int:
    if not args.eps > 0:
        print(f"eigenvalues: --eps must be positive, got {args.eps}",
              file=sys.stderr)
        return 2
    recs = eigenvalues(args.eps, max_count=args.max)
    rows = [
        {
            "re_lambda": r.point.lam.real,
            "im_lambda": r.point.lam.imag,
            "multiplicity": r.multiplicity,
            "residual": r.residual,
        }
        for r in recs
    ]
    _emit(rows, ["re_lambda", "im_lambda", "multiplicity", "residual"],
          fmt, f"eigenvalues --eps {_g(args.eps)} --max {args.max}", None)
    return 0


def _cmd_trace(args, fmt: str) -> int:
    if args.branch < 1:
        print(f"trace: --branch must be >= 1, got {args.branch}",
              file=sys.stderr)
        return 2
    if not (0 < args.eps_from <= args.eps_to):
        print("trace: need 0 < --from <= --to", file=sys.stderr)
        return 2
    tr = trace_lambda(args.branch, args.eps_from, args.eps_to)
    sample_rows = [
        {
            "eps": s.eps,
            "re_lambda": s.lam.real,
            "im_lambda": s.lam.imag,
            "branch": tr.branch,
            "event": "",
        }
        for s in tr.samples
    ]
    event_rows = [
        {
            "eps": e.eps,
            "re_lambda": e.lam.real,
            "im_lambda": e.lam.imag,
            "branch": tr.branch,
            "event": e.kind,
        }
        for e in tr.events
    ]
    # stable merge by eps; at equal eps the plain sample precedes the event
    rows: list[dict] = []
    i = j = 0
    while i < len(sample_rows) or j < len(event_rows):
        if j >= len(event_rows) or (i < len(sample_rows)
                                    and sample_rows[i]["eps"] <= event_rows[j]["eps"]):
            rows.append(sample_rows[i])
            i += 1
        else:
            rows.append(event_rows[j])
            j += 1
    _emit(rows, ["eps", "re_lambda", "im_lambda", "branch", "event"], fmt,
          f"trace --branch {args.branch} --from {_g(args.eps_from)} "
          f"--to {_g(args.eps_to)}", args.out)
    return 0


def _cmd_gamma(args, fmt: str) -> int:
    if args.k < 1:
        print(f"gamma: --k must be >= 1, got {args.k}", file=sys.stderr)
        return 2
    if args.a_from > args.a_to:
        print("gamma: need --from <= --to", file=sys.stderr)
        return 2
    if args.a_from == args.a_to:
        # degenerate window: a single projected point
        curve = trace_gamma(args.k, args.a_from, args.a_from + 1e-9)
        samples = curve.samples[:1]
    else:
        curve = trace_gamma(args.k, args.a_from, args.a_to)
        samples = curve.samples

    def marker_name(a: float) -> str:
        for at, name in _MARKER_NAMES:
            if abs(a - at) < 1e-9:
                return name
        return ""

    rows = [
        {
            "a": a,
            "re_xi": xi.real,
            "im_xi": xi.imag,
            "marker": marker_name(a),
        }
        for a, xi in samples
    ]
    _emit(rows, ["a", "re_xi", "im_xi", "marker"], fmt,
          f"gamma --k {args.k} --from {_g(args.a_from)} --to {_g(args.a_to)}",
          args.out)
    return 0


def _cmd_verify(args, fmt: str, jobs: int | None) -> int:
    report = run_verification(args.level, jobs=jobs)
    sys.stdout.write(report.to_json() + "\n")
    return 0 if report.overall else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="airylocus",
        description="Eigenvalue dynamics of a complexified oscillator "
                    "boundary problem: critical values, spectra, "
                    "trajectories, locus curves, self-verification.",
    )
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format for data commands (default csv)")
    parser.add_argument("--jobs", type=int, default=None, metavar="J",
                        help="worker-pool bound for parallelizable commands "
                             "(default: logical cores)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("critical", help="table of critical values")
    p.add_argument("--count", type=int, required=True, metavar="K")
    p.add_argument("--out", default=None, metavar="F")

    p = sub.add_parser("eigenvalues", help="spectrum at one parameter value")
    p.add_argument("--eps", type=float, required=True, metavar="E")
    p.add_argument("--max", type=int, default=8, metavar="N")

    p = sub.add_parser("trace", help="follow one eigenvalue branch")
    p.add_argument("--branch", type=int, required=True, metavar="N")
    p.add_argument("--from", dest="eps_from", type=float, required=True,
                   metavar="E0")
    p.add_argument("--to", dest="eps_to", type=float, required=True,
                   metavar="E1")
    p.add_argument("--out", required=True, metavar="F")

    p = sub.add_parser("gamma", help="trace one real-locus curve")
    p.add_argument("--k", type=int, required=True, metavar="K")
    p.add_argument("--from", dest="a_from", type=float, required=True,
                   metavar="A0")
    p.add_argument("--to", dest="a_to", type=float, required=True,
                   metavar="A1")
    p.add_argument("--out", required=True, metavar="F")

    p = sub.add_parser("verify", help="run the built-in verification suite")
    p.add_argument("--level", choices=("fast", "full"), default="fast")

    args = parser.parse_args(argv)
    try:
        if args.command == "critical":
            return _cmd_critical(args, args.format)
        if args.command == "eigenvalues":
            return _cmd_eigenvalues(args, args.format)
        if args.command == "trace":
            return _cmd_trace(args, args.format)
        if args.command == "gamma":
            return _cmd_gamma(args, args.format)
        if args.command == "verify":
            return _cmd_verify(args, args.format, args.jobs)
    except AiryLocusError as exc:
        print(f"airylocus: numerical failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"airylocus: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
