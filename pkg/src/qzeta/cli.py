"""Command-line front end.

Subcommands:
  poly    polynomial families and their integer tables for one k
  verify  full identity verification at a truncation order (exit 0 iff pass)
  count   representation counts with closed-form and brute-force columns
  limit   numeric limit report along a q grid (optionally rendered to a figure)
  bench   multiplication strategy timings on a theta-power workload

Every subcommand renders text, JSON, or CSV (--format) to stdout or --out.
Exit status: 0 when all checks in the run pass, 1 on a failed check, 2 on
usage errors. All output is deterministic for fixed inputs except bench
timings (bench digests are deterministic and are compared before timing is
reported).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass

from .identity import t_count_closed_form_check, verify_theorem
from .numerics import default_q_points, qgamma_limit_check, zeta_recovery_check
from .qpoly import coefficient_tables, odd_cofactor, p_even, p_odd
from .series import mul, theta_psi

__all__ = ["CliConfig", "build_parser", "main"]

DEFAULT_ORDER = 200
DEFAULT_N_MAX = 20
DEFAULT_BENCH_ORDER = 512
COUNT_CHOICES = (4, 8, 12, 16, 20)


@dataclass(frozen=True)
class CliConfig:
    """One parsed invocation, normalized from the argparse namespace.

    Fields absent from a subcommand stay None. Defaults are stable:
    format text, output stdout, order 200 (verify) / 512 (bench),
    n_max 20, q grid 1 - 2^-m for m = 4 .. 10.
    """

    subcommand: str
    fmt: str = "text"
    out: str | None = None
    k: int | None = None
    order: int | None = None
    fourk: int | None = None
    n_max: int | None = None
    q_points: tuple[float, ...] | None = None
    check: str | None = None
    plot: str | None = None


def config_from_args(args: argparse.Namespace) -> CliConfig:
    """Build the invocation record; parses the --q-points string if present."""
    raw_qs = getattr(args, "q_points", None)
    return CliConfig(
        subcommand=args.subcommand,
        fmt=args.format,
        out=args.out,
        k=getattr(args, "k", None),
        order=getattr(args, "order", None),
        fourk=getattr(args, "fourk", None),
        n_max=getattr(args, "n_max", None),
        q_points=tuple(_parse_q_points(raw_qs)) if raw_qs is not None else None,
        check=getattr(args, "check", None),
        plot=getattr(args, "plot", None),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qzeta",
        description="Exact q-series engine for the even zeta values.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("text", "json", "csv"),
            default="text",
            help="output format (default: text)",
        )
        p.add_argument(
            "--out",
            metavar="PATH",
            default=None,
            help="write output to PATH instead of stdout",
        )

    p_poly = sub.add_parser("poly", help="polynomial families for one k")
    p_poly.add_argument("--k", type=int, required=True, help="weight parameter, k >= 1")
    add_common(p_poly)

    p_verify = sub.add_parser("verify", help="verify the identity for one k")
    p_verify.add_argument("--k", type=int, required=True, help="weight parameter, k >= 1")
    p_verify.add_argument(
        "--order",
        type=int,
        default=DEFAULT_ORDER,
        help=f"truncation order, at least 4k (default: {DEFAULT_ORDER})",
    )
    add_common(p_verify)

    p_count = sub.add_parser("count", help="triangular-number representation counts")
    which = p_count.add_mutually_exclusive_group(required=True)
    which.add_argument("--k", type=int, help="weight parameter k in 1..5 (tuple length 4k)")
    which.add_argument(
        "--fourk",
        type=int,
        choices=COUNT_CHOICES,
        help="tuple length directly (4, 8, 12, 16, or 20)",
    )
    p_count.add_argument(
        "--n-max",
        type=int,
        default=DEFAULT_N_MAX,
        help=f"largest n in the table (default: {DEFAULT_N_MAX})",
    )
    add_common(p_count)

    p_limit = sub.add_parser("limit", help="numeric limit report along a q grid")
    p_limit.add_argument("--k", type=int, required=True, help="weight parameter, k >= 1")
    p_limit.add_argument(
        "--q-points",
        metavar="A,B,C",
        default=None,
        help="comma-separated strictly increasing q values in [0,1) "
        "(default: 1-2^-m for m=4..10)",
    )
    p_limit.add_argument(
        "--check",
        choices=("recovery", "qgamma"),
        default="recovery",
        help="which limit to evaluate (default: recovery)",
    )
    p_limit.add_argument(
        "--plot",
        metavar="PATH",
        default=None,
        help="also render the report to a figure at PATH",
    )
    add_common(p_limit)

    p_bench = sub.add_parser("bench", help="series multiplication timings")
    p_bench.add_argument(
        "--order",
        type=int,
        default=DEFAULT_BENCH_ORDER,
        help=f"workload truncation order, at least 64 (default: {DEFAULT_BENCH_ORDER})",
    )
    p_bench.add_argument(
        "--plot",
        metavar="PATH",
        default=None,
        help="also render the timings to a figure at PATH",
    )
    add_common(p_bench)

    return parser


# -- subcommand implementations -------------------------------------------------


def cmd_poly(k: int, fmt: str) -> tuple[str, int]:
    tables = coefficient_tables(k)
    a = tables.a
    b = tables.b
    pe = p_even(k)
    po = p_odd(k) if k % 2 == 1 else None
    cofactor = odd_cofactor(k) if k % 2 == 1 else None
    if fmt == "json":
        doc = {
            "k": k,
            "a_table": [str(v) for v in a],
            "b_table": [str(v) for v in b],
            "p_even": pe.to_json_dict(),
            "p_odd": po.to_json_dict() if po is not None else None,
            "odd_cofactor": cofactor.to_json_dict() if cofactor is not None else None,
        }
        return json.dumps(doc, indent=2) + "\n", 0
    if fmt == "csv":
        rows = [("table", "index", "value")]
        rows += [("a", str(m), str(v)) for m, v in enumerate(a)]
        rows += [("b", str(l + 1), str(v)) for l, v in enumerate(b)]
        rows += [("p_even", str(i), str(c)) for i, c in enumerate(pe.coeffs)]
        if po is not None:
            rows += [("p_odd", str(i), str(c)) for i, c in enumerate(po.coeffs)]
        if cofactor is not None:
            rows += [("odd_cofactor", str(i), str(c)) for i, c in enumerate(cofactor.coeffs)]
        return _render_csv(rows), 0
    lines = [
        f"k = {k}",
        f"a-table (m = 0..{2 * k - 1}): " + ", ".join(str(v) for v in a),
        f"b-table (l = 1..{2 * k - 1}): " + ", ".join(str(v) for v in b),
        f"even polynomial (degree {pe.degree}): {pe.format('z')}",
    ]
    if po is not None:
        lines.append(f"odd polynomial (degree {po.degree}): {po.format('z')}")
        lines.append(f"odd polynomial factored: (1 + z^2) * S(z^2) with S(w) = {cofactor.format('w')}")
    return "\n".join(lines) + "\n", 0


def cmd_verify(k: int, order: int, fmt: str) -> tuple[str, int]:
    report = verify_theorem(k, order)
    code = 0 if report.status == "pass" else 1
    if fmt == "json":
        return json.dumps(report.to_json_dict(), indent=2) + "\n", code
    if fmt == "csv":
        rows = [("key", "value")]
        rows += [
            ("k", str(report.k)),
            ("order", str(report.order)),
            ("lhs_series_digest", report.lhs_series_digest),
            ("rhs_series_digest", report.rhs_series_digest),
            ("t_is_zero", str(report.t_is_zero)),
            ("t_parity", report.t_parity),
            ("first_nonzero_exponent", _opt(report.first_nonzero_exponent)),
            ("status", report.status),
            ("failure_exponent", _opt(report.failure_exponent)),
        ]
        rows += [(f"check:{c.name}", "ok" if c.ok else "fail") for c in report.checks]
        if report.closed_form is not None:
            rows.append(("check:count_closed_form", "ok" if report.closed_form.ok else "fail"))
        return _render_csv(rows), code
    return report.format_table() + "\n", code


def cmd_count(fourk: int, n_max: int, fmt: str) -> tuple[str, int]:
    k = fourk // 4
    report = t_count_closed_form_check(k, n_max, brute_limit=60)
    code = 0 if report.ok else 1
    if fmt == "json":
        return json.dumps(report.to_json_dict(), indent=2) + "\n", code
    rows = [("n", "series_coefficient", "closed_form", "brute_force", "agree")]
    for r in report.rows:
        rows.append(
            (
                str(r.n),
                str(r.series_coefficient),
                str(r.closed_form_value),
                _opt(r.brute_force),
                "yes" if r.agree else "NO",
            )
        )
    if fmt == "csv":
        return _render_csv(rows), code
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = [f"tuples of {fourk} triangular numbers (zeros allowed) summing to n"]
    for row in rows:
        lines.append("  " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    lines.append(f"all rows agree: {'yes' if report.ok else 'NO'}")
    return "\n".join(lines) + "\n", code


def cmd_limit(
    k: int, q_points: tuple[float, ...] | None, check: str, fmt: str, plot: str | None
) -> tuple[str, int]:
    if check == "qgamma":
        report = qgamma_limit_check(k, q_points)
    else:
        report = zeta_recovery_check(k, q_points)
    if plot is not None:
        from .plots import render_limit_figure

        render_limit_figure(report, plot)
    if fmt == "json":
        return json.dumps(report.to_json_dict(), indent=2) + "\n", 0
    if fmt == "csv":
        rows = [("q", "lhs", "target", "rel_err")]
        rows += [
            (repr(q), repr(lhs), repr(target), repr(err))
            for q, lhs, target, err in report.csv_rows()
        ]
        return _render_csv(rows), 0
    text = report.format_table()
    if plot is not None:
        text += f"\nfigure written to {plot}"
    return text + "\n", 0


def _bench_workload(order: int, strategy: str) -> tuple[float, str]:
    """Time the theta-power chain psi -> psi^2 -> psi^4 -> psi^8 under one
    multiplication strategy and digest the result."""
    psi = theta_psi(order)
    start = time.perf_counter()
    acc = psi
    for _ in range(3):
        acc = mul(acc, acc, strategy=strategy)
    elapsed = time.perf_counter() - start
    return elapsed, acc.digest()


def cmd_bench(order: int, fmt: str, plot: str | None) -> tuple[str, int]:
    results = []
    digests = set()
    for strategy in ("schoolbook", "karatsuba"):
        seconds, digest = _bench_workload(order, strategy)
        results.append({"strategy": strategy, "seconds": seconds, "digest": digest})
        digests.add(digest)
    if len(digests) != 1:
        detail = ", ".join(f"{r['strategy']}={r['digest'][:16]}" for r in results)
        return f"error: strategy coefficient mismatch: {detail}\n", 1
    doc = {"order": order, "identical": True, "results": results}
    if plot is not None:
        from .plots import render_bench_figure

        render_bench_figure(doc, plot)
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n", 0
    if fmt == "csv":
        rows = [("strategy", "seconds", "digest")]
        rows += [(r["strategy"], repr(r["seconds"]), r["digest"]) for r in results]
        return _render_csv(rows), 0
    lines = [f"series multiplication at order {order} (psi -> psi^8 squaring chain)"]
    for r in results:
        lines.append(f"  {r['strategy']:<12} {r['seconds']:>9.4f} s   digest {r['digest'][:16]}")
    lines.append("coefficients identical across strategies: yes")
    if plot is not None:
        lines.append(f"figure written to {plot}")
    return "\n".join(lines) + "\n", 0


# -- plumbing ---------------------------------------------------------------------


def _render_csv(rows: list[tuple[str, ...]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _opt(v) -> str:
    return "" if v is None else str(v)


def _parse_q_points(spec: str) -> list[float]:
    try:
        return [float(part) for part in spec.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad q point list {spec!r}") from None


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        if cfg.subcommand == "poly":
            if cfg.k < 1:
                parser.error(f"--k must be at least 1, got {cfg.k}")
            text, code = cmd_poly(cfg.k, cfg.fmt)
        elif cfg.subcommand == "verify":
            if cfg.k < 1:
                parser.error(f"--k must be at least 1, got {cfg.k}")
            if cfg.order < 4 * cfg.k:
                parser.error(f"--order must be at least 4k = {4 * cfg.k}, got {cfg.order}")
            text, code = cmd_verify(cfg.k, cfg.order, cfg.fmt)
        elif cfg.subcommand == "count":
            fourk = cfg.fourk if cfg.fourk is not None else 4 * (cfg.k or 0)
            if fourk not in COUNT_CHOICES:
                parser.error(f"tuple length must be one of {COUNT_CHOICES}, got {fourk}")
            if cfg.n_max < 1:
                parser.error(f"--n-max must be at least 1, got {cfg.n_max}")
            text, code = cmd_count(fourk, cfg.n_max, cfg.fmt)
        elif cfg.subcommand == "limit":
            if cfg.k < 1:
                parser.error(f"--k must be at least 1, got {cfg.k}")
            try:
                text, code = cmd_limit(cfg.k, cfg.q_points, cfg.check, cfg.fmt, cfg.plot)
            except ValueError as exc:
                parser.error(str(exc))
        else:
            if cfg.order < 64:
                parser.error(f"--order must be at least 64, got {cfg.order}")
            text, code = cmd_bench(cfg.order, cfg.fmt, cfg.plot)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))

    if cfg.out is not None:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
