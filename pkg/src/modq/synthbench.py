"""Synthetic benchmark graphs and an independent brute-force scorer.

Generation uses ``random.Random`` (the Mersenne Twister) restricted to
its ``random()`` method, the one generator method whose output sequence
for a given seed CPython documents as stable across versions. Exactly
one uniform draw is consumed per candidate node pair, in row-major node
order, so a seed pins the graph byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .depgraph import DependencyGraph, ModulePartition, build_graph
from .errors import InputError
from .modularity import MODES

__all__ = [
    "PlantedPartitionSpec",
    "brute_force_q",
    "planted_partition",
    "random_partition",
]


@dataclass(frozen=True)
class PlantedPartitionSpec:
    """Parameters of a planted-partition random graph.

    ``modules`` equal-sized groups of ``module_size`` nodes each;
    within-group pairs get an edge with probability ``p_in``,
    cross-group pairs with probability ``p_out``.
    """

    modules: int
    module_size: int
    p_in: float
    p_out: float
    directed: bool = True
    seed: int = 0

    def __post_init__(self) -> None:
        if self.modules < 1:
            raise ValueError(f"modules must be >= 1, got {self.modules}")
        if self.module_size < 1:
            raise ValueError(f"module_size must be >= 1, got {self.module_size}")
        for name in ("p_in", "p_out"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")

    @property
    def node_count(self) -> int:
        return self.modules * self.module_size


def _node_names(spec: PlantedPartitionSpec) -> tuple[list[str], list[str]]:
    # Zero-padded so lexicographic node order equals generation order,
    # and module-prefixed so the planted grouping survives a round trip
    # through name-derived partitions.
    module_width = len(str(spec.modules - 1))
    node_width = len(str(spec.module_size - 1))
    names: list[str] = []
    labels: list[str] = []
    for mi in range(spec.modules):
        label = f"m{mi:0{module_width}d}"
        for vi in range(spec.module_size):
            names.append(f"{label}.v{vi:0{node_width}d}")
            labels.append(label)
    return names, labels


def planted_partition(
    spec: PlantedPartitionSpec,
) -> tuple[DependencyGraph, ModulePartition]:
    """Sample a graph with planted modules, plus the planted partition.

    The directed variant flips one coin per ordered pair of distinct
    nodes. The undirected variant flips one coin per unordered pair and
    mirrors each sampled edge, so its graphs are symmetric by
    construction. Isolated nodes stay in the graph.
    """
    rng = random.Random(spec.seed)
    names, labels = _node_names(spec)
    n = len(names)
    s = spec.module_size
    edges: list[tuple[str, str]] = []
    if spec.directed:
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                p = spec.p_in if i // s == j // s else spec.p_out
                if rng.random() < p:
                    edges.append((names[i], names[j]))
    else:
        for i in range(n):
            for j in range(i + 1, n):
                p = spec.p_in if i // s == j // s else spec.p_out
                if rng.random() < p:
                    edges.append((names[i], names[j]))
                    edges.append((names[j], names[i]))
    graph = build_graph(edges, extra_nodes=names)
    partition = ModulePartition.from_assignment(dict(zip(names, labels)))
    return graph, partition


def random_partition(
    graph: DependencyGraph, modules: int, seed: int = 0
) -> ModulePartition:
    """Assign every node uniformly at random to one of ``modules`` labels.

    Nodes are visited in graph order with one draw each, so the result
    is a pure function of the node set and the seed. Labels that happen
    to receive no node simply do not appear in the partition.
    """
    if modules < 1:
        raise ValueError(f"modules must be >= 1, got {modules}")
    rng = random.Random(seed)
    width = len(str(modules - 1))
    assignment: dict[str, str] = {}
    for node in graph.nodes:
        # random() < 1.0 strictly, but guard the product anyway.
        pick = min(int(rng.random() * modules), modules - 1)
        assignment[node] = f"r{pick:0{width}d}"
    return ModulePartition.from_assignment(assignment)


def brute_force_q(
    graph: DependencyGraph,
    partition: ModulePartition,
    mode: str = "directed",
) -> float:
    """Score by materializing the full mixing matrix edge by edge.

    Deliberately shares no arithmetic with :mod:`modq.modularity`:
    fractions accumulate per edge as floats and margins are summed from
    the dense matrix. Slow, but an independent cross-check for the
    production scorer. Degenerate inputs return 0.0 under the same
    convention.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    for node in graph.nodes:
        if node not in partition.assignment:
            raise InputError(f"node {node!r} missing from partition")
    edges = set(graph.edges)
    if mode == "undirected":
        edges.update((v, u) for u, v in graph.edges)
    m = len(edges)
    if m == 0:
        return 0.0
    labels = sorted(set(partition.assignment.values()))
    index = {label: i for i, label in enumerate(labels)}
    size = len(labels)
    e = [[0.0] * size for _ in range(size)]
    for u, v in sorted(edges):
        e[index[partition.assignment[u]]][index[partition.assignment[v]]] += 1.0 / m
    a = [sum(row) for row in e]
    b = [sum(e[i][j] for i in range(size)) for j in range(size)]
    trace = sum(e[i][i] for i in range(size))
    null = sum(ai * bi for ai, bi in zip(a, b))
    intra_modules: set[str] = set()
    crossing = False
    for u, v in edges:
        lu, lv = partition.assignment[u], partition.assignment[v]
        if lu == lv:
            intra_modules.add(lu)
        else:
            crossing = True
    if (not crossing and len(intra_modules) == 1) or abs(1.0 - null) < 1e-12:
        return 0.0
    return (trace - null) / (1.0 - null)
