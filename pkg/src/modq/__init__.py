"""Package-vs-dependency-network coherence scoring for evolving codebases.

The library builds class-level dependency graphs (from edge lists or by
scanning Java sources), scores how well the package structure matches
the dependency structure with a directed modularity metric, and tracks
that score across snapshot histories so projects can be ranked by how
their decomposition quality drifts. The ``modq`` command line wraps the
same pipeline.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .depgraph import (
    DEFAULT_MODULE,
    DependencyGraph,
    ModulePartition,
    build_graph,
    largest_connected_component,
    module_label,
    partition_from_names,
    symmetrize,
)
from .errors import EmptyGraphError, InputError, ModqError
from .evolution import (
    ProjectStats,
    RankEntry,
    Ranking,
    SnapshotEntry,
    SnapshotMetrics,
    SnapshotSeries,
    delta_stats,
    group_projects,
    q_series,
    rank_projects,
)
from .javadep import (
    CompilationUnit,
    ScanResult,
    SnapshotGraph,
    extract_snapshot,
    resolve_dependencies,
    scan_snapshot,
)
from .modularity import (
    MODES,
    MixingMatrix,
    ModularityScore,
    mixing_matrix,
    modularity_q,
    q_at_depth,
)
from .synthbench import (
    PlantedPartitionSpec,
    brute_force_q,
    planted_partition,
    random_partition,
)

__all__ = [
    "DEFAULT_MODULE",
    "MODES",
    "CompilationUnit",
    "DependencyGraph",
    "EmptyGraphError",
    "InputError",
    "MixingMatrix",
    "ModqError",
    "ModularityScore",
    "ModulePartition",
    "PlantedPartitionSpec",
    "ProjectStats",
    "RankEntry",
    "Ranking",
    "ScanResult",
    "SnapshotEntry",
    "SnapshotGraph",
    "SnapshotMetrics",
    "SnapshotSeries",
    "__version__",
    "brute_force_q",
    "build_graph",
    "delta_stats",
    "extract_snapshot",
    "group_projects",
    "largest_connected_component",
    "mixing_matrix",
    "modularity_q",
    "module_label",
    "partition_from_names",
    "planted_partition",
    "q_at_depth",
    "q_series",
    "random_partition",
    "rank_projects",
    "resolve_dependencies",
    "scan_snapshot",
    "symmetrize",
]
