"""Figure rendering: PNG files next to the delimited outputs.

The Agg backend is forced before pyplot loads so rendering works in
headless environments; nothing here opens a window.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .evolution import ProjectStats, Ranking
from .report import Report

__all__ = [
    "plot_group_timelines",
    "plot_q_timeline",
    "plot_ranking",
]

_DPI = 150


def plot_q_timeline(report: Report, path: Path | str) -> Path:
    """Score trajectory of one project across its snapshots."""
    fig, ax = plt.subplots(figsize=(8.0, 4.5))
    xs = [row.timestamp for row in report.rows]
    ys = [row.q for row in report.rows]
    ax.plot(xs, ys, marker="o", markersize=3.5, linewidth=1.2, color="tab:blue")
    ax.set_title(report.project)
    ax.set_xlabel("snapshot")
    ax.set_ylabel("Q")
    ax.grid(True, alpha=0.3)
    fig.autofmt_xdate()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def _key_label(key: str) -> str:
    return "mean dQ per snapshot" if key == "mean" else "std of dQ per snapshot"


def plot_ranking(ranking: Ranking, path: Path | str) -> Path:
    """Bar chart of the ranking key, one bar per project in rank order."""
    names = [entry.stats.project for entry in ranking.entries]
    values = [
        entry.stats.mean_dq if ranking.key == "mean" else entry.stats.std_dq
        for entry in ranking.entries
    ]
    width = max(6.0, 0.45 * len(names) + 2.0)
    fig, ax = plt.subplots(figsize=(width, 4.5))
    ax.bar(range(1, len(names) + 1), values, color="tab:blue")
    ax.set_xticks(range(1, len(names) + 1))
    ax.set_xticklabels(names, rotation=90, fontsize=8)
    ax.set_xlabel("rank")
    ax.set_ylabel(_key_label(ranking.key))
    ax.axhline(0.0, color="black", linewidth=0.8)
    ax.grid(True, axis="y", alpha=0.3)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def plot_group_timelines(
    groups: tuple[tuple[ProjectStats, ...], ...],
    reports: Mapping[str, Report],
    path: Path | str,
) -> Path:
    """One panel per group, each member's trajectory overlaid."""
    count = len(groups)
    fig, axes = plt.subplots(
        count, 1, figsize=(8.0, 2.6 * count), sharex=False, squeeze=False
    )
    for gi, block in enumerate(groups):
        ax = axes[gi][0]
        for stats in block:
            report = reports[stats.project]
            xs = [row.timestamp for row in report.rows]
            ys = [row.q for row in report.rows]
            ax.plot(xs, ys, linewidth=1.0, label=stats.project)
        ax.set_title(f"group {gi + 1}", fontsize=9)
        ax.set_ylabel("Q")
        ax.grid(True, alpha=0.3)
        ax.legend(fontsize=7, ncol=2, frameon=False)
    fig.autofmt_xdate()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path
