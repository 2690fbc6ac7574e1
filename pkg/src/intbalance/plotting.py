"""Convergence figures for integerize runs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .integerize import IntegerizeReport  # noqa: E402


def save_convergence_figure(report: IntegerizeReport, path: str) -> None:
    """Render decimal-edge count and shift size per iteration to an image.

    Epsilon values are converted to float for display only; the data file
    and report keep them exact.
    """
    iterations = list(range(report.iterations + 1))
    remaining = [report.initial_decimal_edges] + [
        s.decimal_edges_remaining for s in report.steps
    ]

    fig, (ax_edges, ax_eps) = plt.subplots(
        2, 1, sharex=True, figsize=(6, 5), constrained_layout=True
    )
    ax_edges.step(iterations, remaining, where="post", marker="o")
    ax_edges.set_ylabel("decimal edges remaining")
    ax_edges.set_ylim(bottom=0)
    ax_edges.grid(True, alpha=0.3)

    if report.steps:
        ax_eps.bar(
            range(1, report.iterations + 1),
            [float(s.epsilon) for s in report.steps],
            width=0.6,
        )
    ax_eps.set_ylabel("shift size")
    ax_eps.set_xlabel("iteration")
    ax_eps.grid(True, alpha=0.3)

    fig.suptitle(
        f"{report.initial_decimal_edges} decimal edges eliminated "
        f"in {report.iterations} iterations"
    )
    fig.savefig(path, dpi=150)
    plt.close(fig)
