"""Report rendering: delimited counts plus matplotlib figures on disk.

Every long-running verification writes a directory containing counts.csv,
a counts.png bar chart, and the representative graphs as JSON files in the
graph file format.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _counts_png(counts: dict, path: str, title: str):
    ns = sorted(counts)
    values = [counts[n] for n in ns]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(ns, values, color="#4878a8")
    ax.set_xlabel("vertices")
    ax.set_ylabel("equivalence classes")
    ax.set_title(title)
    ax.set_xticks(ns)
    for n, v in zip(ns, values):
        ax.annotate(str(v), (n, v), ha="center", va="bottom", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_grow_report(report, outdir: str, title: str = "growing process"):
    """counts.csv + counts.png + reps/NNN.json under outdir."""
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "counts.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "classes"])
        for n in sorted(report.counts_by_n):
            w.writerow([n, report.counts_by_n[n]])
    _counts_png(report.counts_by_n, os.path.join(outdir, "counts.png"), title)
    repdir = os.path.join(outdir, "reps")
    os.makedirs(repdir, exist_ok=True)
    for idx, (key, g) in enumerate(report.representatives):
        name = f"{g.n:02d}_{idx:05d}.json"
        with open(os.path.join(repdir, name), "w") as fh:
            fh.write(g.to_json(indent=1))
    with open(os.path.join(outdir, "report.json"), "w") as fh:
        import json
        json.dump(report.to_json_obj(), fh, indent=1)


def write_classification_report(report, outdir: str):
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "counts.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "classes"])
        for n in sorted(report.counts_by_n):
            w.writerow([n, report.counts_by_n[n]])
    _counts_png(report.counts_by_n, os.path.join(outdir, "counts.png"),
                f"connected cyclotomic classes over {report.ring_tag}")
    with open(os.path.join(outdir, "report.json"), "w") as fh:
        import json
        json.dump(report.to_json_obj(), fh, indent=1)
    for idx, g in enumerate(report.orphans):
        with open(os.path.join(outdir, f"orphan_{idx:03d}.json"), "w") as fh:
            fh.write(g.to_json(indent=1))
