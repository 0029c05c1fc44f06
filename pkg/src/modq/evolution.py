"""Score series over snapshot histories, change statistics, rankings.

A project's history is a sequence of dated snapshots. Scoring the
series yields one modularity value per snapshot; the statistics then
summarize how the score moves between consecutive snapshots, which is
what rankings and groupings compare across projects.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from statistics import fmean, stdev

from .depgraph import DependencyGraph, ModulePartition, largest_connected_component
from .errors import InputError
from .modularity import modularity_q

__all__ = [
    "ProjectStats",
    "RankEntry",
    "Ranking",
    "SnapshotEntry",
    "SnapshotMetrics",
    "SnapshotSeries",
    "delta_stats",
    "group_projects",
    "q_series",
    "rank_projects",
]


@dataclass(frozen=True)
class SnapshotEntry:
    """One dated snapshot: the graph and its module partition."""

    timestamp: date
    graph: DependencyGraph
    partition: ModulePartition


@dataclass(frozen=True)
class SnapshotMetrics:
    """Per-snapshot measurements, describing the graph as scored."""

    q: float
    node_count: int
    edge_count: int
    module_count: int
    degenerate: bool


@dataclass(frozen=True)
class SnapshotSeries:
    """A project's snapshots in time order, optionally with metrics.

    Timestamps must be strictly increasing; ``metrics`` is filled by
    :func:`q_series` and aligns index-for-index with ``entries``.
    """

    project: str
    entries: tuple[SnapshotEntry, ...]
    metrics: tuple[SnapshotMetrics, ...] | None = None

    def __post_init__(self) -> None:
        stamps = [entry.timestamp for entry in self.entries]
        for a, b in zip(stamps, stamps[1:]):
            if not a < b:
                raise InputError(
                    f"snapshot timestamps must be strictly increasing, got {a} then {b}"
                )
        if self.metrics is not None and len(self.metrics) != len(self.entries):
            raise ValueError("metrics must align with entries")


@dataclass(frozen=True)
class ProjectStats:
    """Summary of one project's score trajectory."""

    project: str
    mean_dq: float
    std_dq: float
    first_q: float
    last_q: float
    n_snapshots: int


@dataclass(frozen=True)
class RankEntry:
    rank: int
    stats: ProjectStats


@dataclass(frozen=True)
class Ranking:
    key: str
    order: str
    entries: tuple[RankEntry, ...]


def q_series(
    series: SnapshotSeries, mode: str = "directed", lcc: bool = False
) -> SnapshotSeries:
    """Score every snapshot and attach the metrics.

    With ``lcc`` each snapshot is reduced to its largest weakly
    connected component first and the partition restricted to the
    survivors; the reported counts then describe the reduced graph,
    i.e. exactly what was scored.
    """
    metrics: list[SnapshotMetrics] = []
    for entry in series.entries:
        graph = entry.graph
        partition = entry.partition
        if lcc:
            graph = largest_connected_component(graph)
            partition = partition.restricted_to(graph.nodes)
        try:
            score = modularity_q(graph, partition, mode=mode)
        except InputError as exc:
            raise InputError(f"snapshot {entry.timestamp.isoformat()}: {exc}") from exc
        metrics.append(
            SnapshotMetrics(
                q=score.q,
                node_count=graph.node_count,
                edge_count=graph.edge_count,
                module_count=partition.module_count,
                degenerate=score.degenerate,
            )
        )
    return SnapshotSeries(
        project=series.project, entries=series.entries, metrics=tuple(metrics)
    )


def delta_stats(series: SnapshotSeries) -> ProjectStats:
    """Mean and sample standard deviation of consecutive score changes.

    Needs at least two snapshots to have any change to measure; with
    exactly two there is a mean but no spread, reported as 0.0.
    """
    if series.metrics is None:
        raise ValueError("series has no metrics; run q_series first")
    values = [m.q for m in series.metrics]
    if len(values) < 2:
        raise InputError(
            f"insufficient history for {series.project!r}: "
            f"need at least 2 snapshots, have {len(values)}"
        )
    diffs = [b - a for a, b in zip(values, values[1:])]
    return ProjectStats(
        project=series.project,
        mean_dq=fmean(diffs),
        std_dq=stdev(diffs) if len(diffs) >= 2 else 0.0,
        first_q=values[0],
        last_q=values[-1],
        n_snapshots=len(values),
    )


def _key_value(stats: ProjectStats, key: str) -> float:
    if key == "mean":
        return stats.mean_dq
    if key == "std":
        return stats.std_dq
    raise ValueError(f"key must be 'mean' or 'std', got {key!r}")


def rank_projects(
    stats: list[ProjectStats] | tuple[ProjectStats, ...],
    key: str = "mean",
    order: str = "asc",
) -> Ranking:
    """Rank projects by a change statistic; positions run 1..N.

    The sort is stable with project name as the secondary criterion, so
    ties land in alphabetical order and the ranking is a deterministic
    permutation of the input.
    """
    _key_value(ProjectStats("", 0.0, 0.0, 0.0, 0.0, 0), key)
    if order not in ("asc", "desc"):
        raise ValueError(f"order must be 'asc' or 'desc', got {order!r}")
    if not stats:
        raise InputError("no projects to rank")
    names = [s.project for s in stats]
    if len(set(names)) != len(names):
        duplicate = sorted(n for n in set(names) if names.count(n) > 1)[0]
        raise InputError(f"duplicate project name {duplicate!r} in ranking input")
    ordered = sorted(stats, key=lambda s: s.project)
    ordered.sort(key=lambda s: _key_value(s, key), reverse=(order == "desc"))
    return Ranking(
        key=key,
        order=order,
        entries=tuple(RankEntry(rank=i + 1, stats=s) for i, s in enumerate(ordered)),
    )


def group_projects(
    stats: list[ProjectStats] | tuple[ProjectStats, ...],
    key: str = "std",
    groups: int = 4,
    order: str = "asc",
) -> tuple[tuple[ProjectStats, ...], ...]:
    """Rank, then cut into ``groups`` contiguous near-equal blocks.

    Block sizes differ by at most one, larger blocks first, so 9
    projects in 4 groups split 3-2-2-2. Requires at least as many
    projects as groups.
    """
    if groups < 1:
        raise ValueError(f"groups must be >= 1, got {groups}")
    if len(stats) < groups:
        raise InputError(
            f"cannot form {groups} groups from {len(stats)} projects"
        )
    ranking = rank_projects(stats, key=key, order=order)
    ordered = [entry.stats for entry in ranking.entries]
    base, extra = divmod(len(ordered), groups)
    blocks: list[tuple[ProjectStats, ...]] = []
    start = 0
    for gi in range(groups):
        size = base + (1 if gi < extra else 0)
        blocks.append(tuple(ordered[start : start + size]))
        start += size
    return tuple(blocks)
