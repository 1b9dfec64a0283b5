"""Summary figure for sweep reports."""

from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .harness import SKIP_REASONS, SweepReport  # noqa: E402


def sweep_figure(report: SweepReport, path: str, dpi: int = 120) -> None:
    """Gate counters on the left, hypothesis slack (sigma4 - rhs) on the right.

    Needs ``report.per_instance`` for the slack panel; infinite sigma values
    are counted in the title rather than plotted.
    """
    fig, (ax_gate, ax_slack) = plt.subplots(1, 2, figsize=(10, 4))

    labels = list(SKIP_REASONS) + ["found", "counterexample"]
    values = [report.skipped[r] for r in SKIP_REASONS] + [report.found, len(report.counterexamples)]
    colors = ["0.7"] * len(SKIP_REASONS) + ["tab:green", "tab:red"]
    ax_gate.barh(labels, values, color=colors)
    ax_gate.set_xlabel("instances")
    ax_gate.set_title(f"t={report.t}, l={report.l}: {report.total} graphs")
    for y, v in enumerate(values):
        ax_gate.text(v, y, f" {v}", va="center", fontsize=8)

    slack = Counter()
    unbounded = 0
    for rec in report.per_instance or ():
        if "sigma4" not in rec:
            continue
        if rec["sigma4"] == "+inf":
            unbounded += 1
        else:
            slack[rec["sigma4"] - rec["rhs"]] += 1
    if slack:
        xs = sorted(slack)
        ax_slack.bar(xs, [slack[x] for x in xs], color="tab:blue", width=0.8)
        ax_slack.axvline(-0.5, color="k", lw=0.8, ls="--")
    ax_slack.set_xlabel("sigma4 - rhs")
    ax_slack.set_ylabel("instances")
    ax_slack.set_title(f"finite sigma4 ({unbounded} unbounded)")

    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
