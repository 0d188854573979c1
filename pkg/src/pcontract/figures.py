"""Figures for the report path, written next to the text/JSON output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _stem(report: dict) -> str:
    pp = "".join(str(i) for i in report["pi_prime"]) or "empty"
    return f"{report['kind']}_{report['type']}_pi{pp}"


def _label(w) -> str:
    return "(" + ",".join(str(c) for c in w) + ")"


def plot_semi_invariants(report: dict, ax):
    rows = report["rows"]
    xs = range(len(rows))
    lb = [r["lower_bound"] for r in rows]
    found = [r["found"] for r in rows]
    ax.bar([x - 0.2 for x in xs], lb, width=0.4, label="lower bound", color="0.6")
    ax.bar([x + 0.2 for x in xs], found, width=0.4, label="found", color="tab:blue")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([_label(r["weight"]) for r in rows], rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("multiplicity")
    ax.set_title(f"{report['type']}, pi'={report['pi_prime']}: semi-invariants by weight")
    ax.legend(frameon=False, loc="lower right")
    ax.yaxis.get_major_locator().set_params(integer=True)


def plot_lower_bound(report: dict, ax):
    char = report["character"]
    by_deg: dict[int, int] = {}
    for c in char:
        by_deg[c["deg"]] = by_deg.get(c["deg"], 0) + c["coefficient"]
    ks = sorted(by_deg)
    ax.bar(ks, [by_deg[k] for k in ks], color="tab:blue")
    ax.set_xlabel("deg")
    ax.set_ylabel("sum of coefficients")
    ax.set_title(f"{report['type']}, pi'={report['pi_prime']}: lower bound")


def plot_gr_dims(report: dict, ax):
    tot = report["gr_totals"]
    ax.bar(range(len(tot)), tot, color="tab:green")
    ax.set_xlabel("k")
    ax.set_ylabel("dim gr_k")
    ax.set_title(f"{report['type']}, lambda={_label(report['lambda'])}: PBW graded dims")


PLOTTERS = {
    "semi_invariant_report": plot_semi_invariants,
    "lower_bound": plot_lower_bound,
    "hwmod": plot_gr_dims,
}


def write_figures(report: dict, directory: str | Path) -> list[Path]:
    """Render the figure for ``report`` into ``directory``; returns the written paths."""
    plotter = PLOTTERS.get(report["kind"])
    if plotter is None:
        return []
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(6, 4))
    plotter(report, ax)
    fig.tight_layout()
    path = directory / f"{_stem(report)}.png"
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
    return [path]
