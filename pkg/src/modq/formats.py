"""On-disk input formats: edge lists, partitions, snapshot layouts.

Edge lists are UTF-8 text, one dependency per line, tab separated:

    source<TAB>target[<TAB>date]

Full-line comments start with ``#``; blank lines are ignored. The
optional third field is an ISO-8601 date and feeds the temporal mode,
where one file describes a whole history and each distinct date becomes
a cumulative snapshot (an edge is present from its date onward).

Snapshot directories hold one subdirectory per snapshot, named by ISO
date (``2004-08-01``). Each subdirectory contains either an
``edges.tsv`` edge list or a Java source tree; a series must not mix
the two layouts.
"""

from __future__ import annotations

from datetime import date
from pathlib import Path

from .depgraph import DependencyGraph, ModulePartition, build_graph, partition_from_names
from .errors import InputError
from .evolution import SnapshotEntry, SnapshotSeries
from .javadep import SnapshotGraph, extract_snapshot

__all__ = [
    "EDGES_FILENAME",
    "build_series",
    "detect_input_mode",
    "discover_snapshots",
    "load_edgelist_snapshots",
    "load_source_snapshots",
    "load_temporal_snapshots",
    "read_edgelist",
    "read_partition_file",
    "write_edgelist",
    "write_partition_file",
]

EDGES_FILENAME = "edges.tsv"

TEMPORAL_EDGELIST = "temporal-edgelist"
EDGELIST_SNAPSHOTS = "edgelist-snapshots"
SOURCE_SNAPSHOTS = "source-snapshots"


def _parse_date(token: str, where: str) -> date:
    try:
        return date.fromisoformat(token)
    except ValueError:
        raise InputError(f"{where}: invalid ISO date {token!r}") from None


def read_edgelist(
    path: Path | str, require_timestamp: bool = False
) -> list[tuple[str, str, date | None]]:
    """Parse an edge-list file into (source, target, date) records.

    Errors carry ``file:line`` so a bad record in a large list can be
    found. ``require_timestamp`` makes the third field mandatory, which
    the temporal loader needs.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except (UnicodeDecodeError, OSError) as exc:
        raise InputError(f"{path}: unreadable edge list ({exc})") from None
    records: list[tuple[str, str, date | None]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = line.split("\t")
        where = f"{path}:{lineno}"
        if len(fields) not in (2, 3):
            raise InputError(
                f"{where}: expected 2 or 3 tab-separated fields, got {len(fields)}"
            )
        source, target = fields[0].strip(), fields[1].strip()
        if not source or not target:
            raise InputError(f"{where}: empty node name")
        stamp: date | None = None
        if len(fields) == 3:
            stamp = _parse_date(fields[2].strip(), where)
        elif require_timestamp:
            raise InputError(
                f"{where}: temporal mode needs a date in every record "
                "(source<TAB>target<TAB>date)"
            )
        records.append((source, target, stamp))
    return records


def _writable_name(name: str, kind: str) -> str:
    if "\t" in name or "\n" in name:
        raise InputError(f"{kind} {name!r} contains a tab or newline, not writable")
    return name


def write_edgelist(graph: DependencyGraph, path: Path | str) -> Path:
    """Write the graph's edges as a two-column edge list.

    Isolated nodes have no representation in this format and are lost
    on a round trip.
    """
    path = Path(path)
    lines = [
        f"{_writable_name(u, 'node name')}\t{_writable_name(v, 'node name')}"
        for u, v in graph.edges
    ]
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return path


def read_partition_file(path: Path | str) -> ModulePartition:
    """Parse ``node<TAB>label`` lines into a partition.

    A node listed twice with different labels is an error; repeating an
    identical line is tolerated.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except (UnicodeDecodeError, OSError) as exc:
        raise InputError(f"{path}: unreadable partition file ({exc})") from None
    assignment: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = line.split("\t")
        where = f"{path}:{lineno}"
        if len(fields) != 2:
            raise InputError(
                f"{where}: expected node<TAB>label, got {len(fields)} fields"
            )
        node, label = fields[0].strip(), fields[1].strip()
        if not node or not label:
            raise InputError(f"{where}: empty node name or label")
        if node in assignment and assignment[node] != label:
            raise InputError(
                f"{where}: node {node!r} assigned to both "
                f"{assignment[node]!r} and {label!r}"
            )
        assignment[node] = label
    if not assignment:
        raise InputError(f"{path}: partition file holds no assignments")
    return ModulePartition.from_assignment(assignment)


def write_partition_file(partition: ModulePartition, path: Path | str) -> Path:
    path = Path(path)
    lines = [
        f"{_writable_name(node, 'node name')}\t{_writable_name(label, 'module label')}"
        for node, label in sorted(partition.assignment.items())
    ]
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return path


def discover_snapshots(root: Path | str) -> list[tuple[date, Path]]:
    """Dated snapshot subdirectories of ``root``, in time order.

    Dot-directories and plain files are ignored; any other subdirectory
    whose name is not an ISO date is an error, because a typo in a date
    must not silently drop a snapshot.
    """
    root = Path(root)
    if not root.is_dir():
        raise InputError(f"{root}: not a directory")
    found: list[tuple[date, Path]] = []
    for child in sorted(root.iterdir()):
        if not child.is_dir() or child.name.startswith("."):
            continue
        try:
            stamp = date.fromisoformat(child.name)
        except ValueError:
            raise InputError(
                f"{child}: snapshot directory name must be an ISO date (YYYY-MM-DD)"
            ) from None
        found.append((stamp, child))
    if not found:
        raise InputError(f"{root}: no snapshot directories found")
    return found


def detect_input_mode(path: Path | str) -> str:
    """Classify a snapshots argument.

    A file is a temporal edge list. A directory is a snapshot series,
    and every snapshot must use the same layout: all ``edges.tsv`` or
    all source trees.
    """
    path = Path(path)
    if path.is_file():
        return TEMPORAL_EDGELIST
    if not path.exists():
        raise InputError(f"{path}: no such file or directory")
    snapshots = discover_snapshots(path)
    modes = {
        EDGELIST_SNAPSHOTS if (d / EDGES_FILENAME).is_file() else SOURCE_SNAPSHOTS
        for _, d in snapshots
    }
    if len(modes) > 1:
        raise InputError(f"{path}: snapshots mix edge-list and source layouts")
    return modes.pop()


def load_temporal_snapshots(path: Path | str) -> list[tuple[date, DependencyGraph]]:
    """Cumulative snapshots from one dated edge list.

    Each distinct date in the file becomes a snapshot containing every
    edge dated at or before it. Edges therefore never disappear; a
    history where dependencies are also removed needs the per-snapshot
    directory layout instead.
    """
    records = read_edgelist(path, require_timestamp=True)
    if not records:
        raise InputError(f"{path}: edge list holds no records")
    cuts = sorted({stamp for _, _, stamp in records})
    out: list[tuple[date, DependencyGraph]] = []
    for cut in cuts:
        edges = [(s, t) for s, t, stamp in records if stamp <= cut]
        out.append((cut, build_graph(edges)))
    return out


def load_edgelist_snapshots(root: Path | str) -> list[tuple[date, DependencyGraph]]:
    """One graph per dated subdirectory's ``edges.tsv``."""
    out: list[tuple[date, DependencyGraph]] = []
    for stamp, directory in discover_snapshots(root):
        edge_file = directory / EDGES_FILENAME
        if not edge_file.is_file():
            raise InputError(f"{directory}: missing {EDGES_FILENAME}")
        records = read_edgelist(edge_file)
        out.append((stamp, build_graph((s, t) for s, t, _ in records)))
    return out


def load_source_snapshots(root: Path | str) -> list[tuple[date, SnapshotGraph]]:
    """One extraction per dated subdirectory's Java source tree."""
    return [(stamp, extract_snapshot(d)) for stamp, d in discover_snapshots(root)]


def build_series(
    project: str,
    dated_graphs: list[tuple[date, DependencyGraph]],
    depth: int | None = None,
) -> SnapshotSeries:
    """Assemble a series, deriving each partition from node names."""
    entries = tuple(
        SnapshotEntry(
            timestamp=stamp,
            graph=graph,
            partition=partition_from_names(graph, depth=depth),
        )
        for stamp, graph in dated_graphs
    )
    return SnapshotSeries(project=project, entries=entries)
