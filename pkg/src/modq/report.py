"""Analysis reports: the JSON document, series CSV, ranking tables.

The JSON report is the machine-readable record of one analysis run and
the input to cross-project ranking. The CSV views are flat tables meant
for spreadsheets and plotting. All writers are deterministic: same
analysis, same bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import date
from pathlib import Path
from typing import Mapping

from .errors import InputError
from .evolution import ProjectStats, Ranking, SnapshotSeries

__all__ = [
    "CSV_HEADER",
    "Report",
    "SnapshotRow",
    "build_report",
    "groups_csv_text",
    "ranking_csv_text",
    "read_report",
    "report_to_json",
    "series_csv_text",
    "write_report",
    "write_series_csv",
    "write_text",
]

CSV_HEADER = "timestamp,nodes,edges,modules,q,degenerate"


@dataclass(frozen=True)
class SnapshotRow:
    """One line of the per-snapshot table."""

    timestamp: date
    nodes: int
    edges: int
    modules: int
    q: float
    degenerate: bool


@dataclass(frozen=True)
class Report:
    project: str
    tool_version: str
    config: Mapping[str, object]
    rows: tuple[SnapshotRow, ...]
    stats: ProjectStats | None


def build_report(
    series: SnapshotSeries,
    stats: ProjectStats | None,
    config: Mapping[str, object],
    tool_version: str | None = None,
) -> Report:
    if series.metrics is None:
        raise ValueError("series has no metrics; run q_series first")
    if tool_version is None:
        from . import __version__ as tool_version
    rows = tuple(
        SnapshotRow(
            timestamp=entry.timestamp,
            nodes=metric.node_count,
            edges=metric.edge_count,
            modules=metric.module_count,
            q=metric.q,
            degenerate=metric.degenerate,
        )
        for entry, metric in zip(series.entries, series.metrics)
    )
    return Report(
        project=series.project,
        tool_version=tool_version,
        config=dict(config),
        rows=rows,
        stats=stats,
    )


def report_to_json(report: Report) -> str:
    """Serialize with fixed key order; floats keep full precision here
    so ranking a written report loses nothing."""
    payload: dict[str, object] = {
        "project": report.project,
        "tool": "modq",
        "tool_version": report.tool_version,
        "config": dict(report.config),
        "snapshots": [
            {
                "timestamp": row.timestamp.isoformat(),
                "nodes": row.nodes,
                "edges": row.edges,
                "modules": row.modules,
                "q": row.q,
                "degenerate": row.degenerate,
            }
            for row in report.rows
        ],
        "stats": None
        if report.stats is None
        else {
            "n_snapshots": report.stats.n_snapshots,
            "first_q": report.stats.first_q,
            "last_q": report.stats.last_q,
            "mean_dq": report.stats.mean_dq,
            "std_dq": report.stats.std_dq,
        },
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def write_report(report: Report, path: Path | str) -> Path:
    path = Path(path)
    path.write_text(report_to_json(report), encoding="utf-8")
    return path


def read_report(path: Path | str) -> Report:
    """Parse a report written by :func:`write_report`.

    Every failure mode names the offending file: rank runs read dozens
    of reports and a bare parse error would be useless.
    """
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except (UnicodeDecodeError, OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: not a readable report ({exc})") from None
    try:
        project = payload["project"]
        rows = tuple(
            SnapshotRow(
                timestamp=date.fromisoformat(item["timestamp"]),
                nodes=int(item["nodes"]),
                edges=int(item["edges"]),
                modules=int(item["modules"]),
                q=float(item["q"]),
                degenerate=bool(item["degenerate"]),
            )
            for item in payload["snapshots"]
        )
        raw_stats = payload["stats"]
        stats = (
            None
            if raw_stats is None
            else ProjectStats(
                project=project,
                mean_dq=float(raw_stats["mean_dq"]),
                std_dq=float(raw_stats["std_dq"]),
                first_q=float(raw_stats["first_q"]),
                last_q=float(raw_stats["last_q"]),
                n_snapshots=int(raw_stats["n_snapshots"]),
            )
        )
        return Report(
            project=project,
            tool_version=str(payload.get("tool_version", "")),
            config=dict(payload.get("config", {})),
            rows=rows,
            stats=stats,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed report ({exc!r})") from None


def series_csv_text(report: Report) -> str:
    """Per-snapshot table; q is printed with six decimals."""
    lines = [CSV_HEADER]
    for row in report.rows:
        lines.append(
            f"{row.timestamp.isoformat()},{row.nodes},{row.edges},{row.modules},"
            f"{row.q:.6f},{'true' if row.degenerate else 'false'}"
        )
    return "\n".join(lines) + "\n"


def write_series_csv(report: Report, path: Path | str) -> Path:
    path = Path(path)
    path.write_text(series_csv_text(report), encoding="utf-8")
    return path


def _csv_name(name: str) -> str:
    if "," in name or "\n" in name:
        raise InputError(f"project name {name!r} contains a comma or newline")
    return name


def ranking_csv_text(ranking: Ranking) -> str:
    lines = ["rank,project,mean_dq,std_dq"]
    for entry in ranking.entries:
        s = entry.stats
        lines.append(
            f"{entry.rank},{_csv_name(s.project)},{s.mean_dq:.6f},{s.std_dq:.6f}"
        )
    return "\n".join(lines) + "\n"


def groups_csv_text(groups: tuple[tuple[ProjectStats, ...], ...]) -> str:
    """Group composition table; ranks continue across groups, so the
    concatenation of the blocks reads back as the full ranking."""
    lines = ["group,rank,project,mean_dq,std_dq"]
    rank = 0
    for gi, block in enumerate(groups, start=1):
        for s in block:
            rank += 1
            lines.append(
                f"{gi},{rank},{_csv_name(s.project)},{s.mean_dq:.6f},{s.std_dq:.6f}"
            )
    return "\n".join(lines) + "\n"


def write_text(text: str, path: Path | str) -> Path:
    path = Path(path)
    path.write_text(text, encoding="utf-8")
    return path
