"""Command-line front end.

Subcommands:

    analyze   score one project's snapshot history
    rank      rank analyzed projects by their change statistics
    export    write one graph as GraphML or DOT
    synth     generate a planted-partition benchmark graph
    version   print the tool version

Exit codes: 0 success, 1 bad input or usage, 2 internal error. All
figure rendering is opt-in (``--figures DIR``) and sits beside the
JSON/CSV outputs, never instead of them.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .depgraph import build_graph, largest_connected_component, partition_from_names
from .errors import InputError, ModqError
from .evolution import delta_stats, group_projects, q_series, rank_projects
from .exports import EXPORT_FORMATS, export_graph
from .formats import (
    EDGELIST_SNAPSHOTS,
    TEMPORAL_EDGELIST,
    build_series,
    detect_input_mode,
    load_edgelist_snapshots,
    load_source_snapshots,
    load_temporal_snapshots,
    read_edgelist,
    read_partition_file,
    write_edgelist,
    write_partition_file,
)
from .javadep import extract_snapshot
from .modularity import MODES, modularity_q
from .report import (
    Report,
    build_report,
    groups_csv_text,
    ranking_csv_text,
    read_report,
    report_to_json,
    write_report,
    write_series_csv,
    write_text,
)
from .synthbench import PlantedPartitionSpec, planted_partition

__all__ = ["AnalysisConfig", "main", "run_analyze"]


class _Parser(argparse.ArgumentParser):
    """Parser whose usage failures exit with the input-error code (1)."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {value}")
    return value


@dataclass(frozen=True)
class AnalysisConfig:
    """Settings for one analyze run.

    Output paths must be pairwise distinct so one artifact can never
    silently overwrite another.
    """

    snapshots: Path
    project: str
    mode: str = "directed"
    lcc: bool = False
    depth: int | None = None
    report_path: Path | None = None
    csv_path: Path | None = None
    graphml_dir: Path | None = None
    figures_dir: Path | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise InputError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.depth is not None and self.depth < 1:
            raise InputError(f"depth must be >= 1, got {self.depth}")
        outputs = [
            Path(p).resolve()
            for p in (
                self.report_path,
                self.csv_path,
                self.graphml_dir,
                self.figures_dir,
            )
            if p is not None
        ]
        if len(set(outputs)) != len(outputs):
            raise InputError("output paths must be pairwise distinct")


def run_analyze(config: AnalysisConfig) -> Report:
    """Load snapshots, score the series, write the requested outputs.

    Returns the report regardless of which files were requested, so
    library callers can use this as the one-call pipeline.
    """
    input_mode = detect_input_mode(config.snapshots)
    if input_mode == TEMPORAL_EDGELIST:
        dated = load_temporal_snapshots(config.snapshots)
    elif input_mode == EDGELIST_SNAPSHOTS:
        dated = load_edgelist_snapshots(config.snapshots)
    else:
        extracted = load_source_snapshots(config.snapshots)
        for stamp, snapshot_graph in extracted:
            skipped = snapshot_graph.stats.get("files_skipped", 0)
            if skipped:
                print(
                    f"warning: snapshot {stamp.isoformat()}: skipped "
                    f"{skipped} unreadable file(s)",
                    file=sys.stderr,
                )
        dated = [(stamp, sg.graph) for stamp, sg in extracted]

    series = build_series(config.project, dated, depth=config.depth)
    scored = q_series(series, mode=config.mode, lcc=config.lcc)
    if len(scored.entries) >= 2:
        stats = delta_stats(scored)
    else:
        stats = None
        print(
            "warning: only one snapshot; change statistics omitted",
            file=sys.stderr,
        )
    report = build_report(
        scored,
        stats,
        {
            "snapshots": str(config.snapshots),
            "input_mode": input_mode,
            "mode": config.mode,
            "lcc": config.lcc,
            "depth": config.depth,
        },
    )
    if config.report_path is not None:
        write_report(report, config.report_path)
    if config.csv_path is not None:
        write_series_csv(report, config.csv_path)
    if config.graphml_dir is not None:
        config.graphml_dir.mkdir(parents=True, exist_ok=True)
        for entry in scored.entries:
            graph, partition = entry.graph, entry.partition
            if config.lcc:
                graph = largest_connected_component(graph)
                partition = partition.restricted_to(graph.nodes)
            export_graph(
                graph,
                partition,
                "graphml",
                config.graphml_dir / f"{entry.timestamp.isoformat()}.graphml",
            )
    if config.figures_dir is not None:
        config.figures_dir.mkdir(parents=True, exist_ok=True)
        from .figures import plot_q_timeline

        plot_q_timeline(report, config.figures_dir / "q_timeline.png")
    return report


def _cmd_analyze(args: argparse.Namespace) -> int:
    config = AnalysisConfig(
        snapshots=Path(args.snapshots),
        project=args.project or Path(args.snapshots).stem,
        mode=args.mode,
        lcc=args.lcc,
        depth=args.depth,
        report_path=Path(args.out) if args.out else None,
        csv_path=Path(args.csv) if args.csv else None,
        graphml_dir=Path(args.graphml) if args.graphml else None,
        figures_dir=Path(args.figures) if args.figures else None,
    )
    report = run_analyze(config)
    if config.report_path is None:
        sys.stdout.write(report_to_json(report))
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    reports = []
    for path in args.reports:
        report = read_report(path)
        if report.stats is None:
            raise InputError(
                f"{path}: report has no change statistics "
                "(the analysis saw fewer than 2 snapshots)"
            )
        reports.append(report)
    stats_list = [report.stats for report in reports]
    ranking = rank_projects(stats_list, key=args.key, order=args.order)
    ranking_text = ranking_csv_text(ranking)
    if args.out:
        write_text(ranking_text, args.out)
    else:
        sys.stdout.write(ranking_text)

    groups = None
    if args.groups > 0:
        if len(stats_list) < args.groups:
            print(
                f"warning: {len(stats_list)} project(s) cannot fill "
                f"{args.groups} groups; grouping skipped",
                file=sys.stderr,
            )
        else:
            groups = group_projects(
                stats_list, key=args.key, groups=args.groups, order=args.order
            )
            groups_text = groups_csv_text(groups)
            if args.groups_out:
                write_text(groups_text, args.groups_out)
            else:
                sys.stdout.write(groups_text)

    if args.figures:
        figures_dir = Path(args.figures)
        figures_dir.mkdir(parents=True, exist_ok=True)
        from .figures import plot_group_timelines, plot_ranking

        plot_ranking(ranking, figures_dir / "ranking.png")
        if groups is not None:
            plot_group_timelines(
                groups,
                {report.project: report for report in reports},
                figures_dir / "groups.png",
            )
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    if args.partition and args.depth:
        raise InputError("--partition and --depth are mutually exclusive")
    if args.edges:
        records = read_edgelist(args.edges)
        graph = build_graph((s, t) for s, t, _ in records)
    else:
        graph = extract_snapshot(args.source).graph
    if args.lcc:
        graph = largest_connected_component(graph)
    if args.partition:
        partition = read_partition_file(args.partition)
    else:
        partition = partition_from_names(graph, depth=args.depth)
    export_graph(graph, partition, args.format, args.out)
    return 0


def _cmd_synth(args: argparse.Namespace) -> int:
    spec = PlantedPartitionSpec(
        modules=args.modules,
        module_size=args.size,
        p_in=args.p_in,
        p_out=args.p_out,
        directed=(args.mode == "directed"),
        seed=args.seed,
    )
    graph, partition = planted_partition(spec)
    write_edgelist(graph, args.out)
    if args.partition_out:
        write_partition_file(partition, args.partition_out)
    score = modularity_q(graph, partition, mode=args.mode)
    print(f"nodes={graph.node_count} edges={graph.edge_count} q={score.q:.6f}")
    return 0


def _cmd_version(args: argparse.Namespace) -> int:
    print(f"modq {__version__}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="modq",
        description="Score how well package decompositions match class dependencies.",
    )
    parser.add_argument(
        "--version", action="version", version=f"modq {__version__}"
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    analyze = commands.add_parser(
        "analyze", help="score one project's snapshot history"
    )
    analyze.add_argument(
        "--snapshots",
        required=True,
        help="edge-list file (temporal) or directory of dated snapshots",
    )
    analyze.add_argument("--project", help="project name (default: input basename)")
    analyze.add_argument("--mode", choices=MODES, default="directed")
    analyze.add_argument(
        "--lcc",
        action="store_true",
        help="score only the largest weakly connected component",
    )
    analyze.add_argument(
        "--depth",
        type=_positive_int,
        help="truncate package labels to this many leading segments",
    )
    analyze.add_argument("--out", help="report JSON path (default: stdout)")
    analyze.add_argument("--csv", help="per-snapshot CSV path")
    analyze.add_argument("--graphml", help="directory for per-snapshot GraphML files")
    analyze.add_argument("--figures", help="directory for rendered figures")
    analyze.set_defaults(handler=_cmd_analyze)

    rank = commands.add_parser(
        "rank", help="rank analyzed projects by change statistics"
    )
    rank.add_argument("reports", nargs="+", help="report JSON files from analyze")
    rank.add_argument("--key", choices=("mean", "std"), default="mean")
    rank.add_argument("--order", choices=("asc", "desc"), default="asc")
    rank.add_argument(
        "--groups",
        type=_nonnegative_int,
        default=4,
        help="number of contiguous groups to cut the ranking into (0 disables)",
    )
    rank.add_argument("--out", help="ranking CSV path (default: stdout)")
    rank.add_argument("--groups-out", help="group composition CSV path")
    rank.add_argument("--figures", help="directory for rendered figures")
    rank.set_defaults(handler=_cmd_rank)

    export = commands.add_parser("export", help="write one graph as GraphML or DOT")
    source = export.add_mutually_exclusive_group(required=True)
    source.add_argument("--edges", help="edge-list file")
    source.add_argument("--source", help="Java source tree")
    export.add_argument("--partition", help="node<TAB>label partition file")
    export.add_argument(
        "--depth",
        type=_positive_int,
        help="truncate package labels to this many leading segments",
    )
    export.add_argument(
        "--lcc",
        action="store_true",
        help="export only the largest weakly connected component",
    )
    export.add_argument("--format", choices=EXPORT_FORMATS, default="graphml")
    export.add_argument("--out", required=True, help="output path")
    export.set_defaults(handler=_cmd_export)

    synth = commands.add_parser(
        "synth", help="generate a planted-partition benchmark graph"
    )
    synth.add_argument("--modules", type=_positive_int, required=True)
    synth.add_argument("--size", type=_positive_int, required=True,
                       help="nodes per module")
    synth.add_argument("--p-in", type=_probability, required=True,
                       help="within-module edge probability")
    synth.add_argument("--p-out", type=_probability, required=True,
                       help="cross-module edge probability")
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("--mode", choices=MODES, default="directed")
    synth.add_argument("--out", required=True, help="edge-list output path")
    synth.add_argument("--partition-out", help="partition file output path")
    synth.set_defaults(handler=_cmd_synth)

    version = commands.add_parser("version", help="print the tool version")
    version.set_defaults(handler=_cmd_version)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 1
    try:
        return args.handler(args)
    except ModqError as exc:
        print(f"modq: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"modq: error: {exc}", file=sys.stderr)
        return 1
    except Exception:  # noqa: BLE001 - last-resort boundary
        traceback.print_exc()
        return 2
