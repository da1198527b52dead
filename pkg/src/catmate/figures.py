"""Summary figures for check reports, rendered to files next to the output."""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

_STATUS_ORDER = ["pass", "fail", "undecided", "skipped"]
_COLORS = {"pass": "#2a9d8f", "fail": "#e76f51", "undecided": "#e9c46a",
           "skipped": "#8d99ae"}


def render_report_figures(report, out_dir):
    """Write a status-summary bar chart and a per-check runtime chart.

    Returns the list of files written.
    """
    os.makedirs(out_dir, exist_ok=True)
    written = []
    counts = report.summary()
    fig, ax = plt.subplots(figsize=(5, 3.2))
    xs = range(len(_STATUS_ORDER))
    ax.bar(xs, [counts[s] for s in _STATUS_ORDER],
           color=[_COLORS[s] for s in _STATUS_ORDER])
    ax.set_xticks(list(xs))
    ax.set_xticklabels(_STATUS_ORDER)
    ax.set_ylabel("checks")
    ax.set_title(f"suite {report.suite}: status summary")
    fig.tight_layout()
    path = os.path.join(out_dir, f"{report.suite}_status.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    if report.records:
        fig, ax = plt.subplots(
            figsize=(6, max(2.0, 0.28 * len(report.records))))
        ids = [r.id for r in report.records]
        times = [r.runtime for r in report.records]
        colors = [_COLORS[r.status] for r in report.records]
        ys = range(len(ids))
        ax.barh(list(ys), times, color=colors)
        ax.set_yticks(list(ys))
        ax.set_yticklabels(ids, fontsize=6)
        ax.invert_yaxis()
        ax.set_xlabel("seconds")
        ax.set_title(f"suite {report.suite}: check runtimes")
        fig.tight_layout()
        path = os.path.join(out_dir, f"{report.suite}_runtimes.png")
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
