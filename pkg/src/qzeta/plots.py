"""Figure rendering for reports: limit convergence and benchmark timings.

Uses the Agg backend and writes files only; nothing here opens a window. The
CLI calls these when the user passes --plot alongside the usual text/JSON/CSV
output, so a report and its picture land next to each other.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

__all__ = ["render_limit_figure", "render_bench_figure"]


def render_limit_figure(report, path: str) -> None:
    """Two panels: values along the q grid against the target, and the
    relative error on a log scale."""
    fig, (ax_val, ax_err) = plt.subplots(1, 2, figsize=(9.0, 3.6))

    ax_val.plot(report.q_points, report.lhs_values, "o-", label="lhs")
    if any(r != report.target for r in report.rhs_values):
        ax_val.plot(report.q_points, report.rhs_values, "s--", label="rhs")
    ax_val.axhline(report.target, color="gray", lw=1, ls=":", label="target")
    ax_val.set_xlabel("q")
    ax_val.set_ylabel("value")
    ax_val.set_title(f"{report.check}, k={report.k}")
    ax_val.legend(fontsize=8)

    ax_err.semilogy(report.q_points, report.relative_errors, "o-")
    ax_err.set_xlabel("q")
    ax_err.set_ylabel("relative error")
    ax_err.set_title("convergence" if report.converging else "NOT monotone")
    ax_err.grid(True, which="both", alpha=0.3)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_bench_figure(result: dict, path: str) -> None:
    """Bar chart of seconds per multiplication strategy."""
    names = [row["strategy"] for row in result["results"]]
    times = [row["seconds"] for row in result["results"]]
    fig, ax = plt.subplots(figsize=(5.0, 3.2))
    ax.bar(names, times, color=["#4878d0", "#ee854a"][: len(names)])
    ax.set_ylabel("seconds")
    ax.set_title(f"series multiplication, order {result['order']}")
    for i, t in enumerate(times):
        ax.text(i, t, f"{t:.3f}", ha="center", va="bottom", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
