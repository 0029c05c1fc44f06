"""Immutable class-dependency graphs and module partitions.

Nodes are fully qualified class names such as ``org.example.Foo``; an
edge ``(u, v)`` records that ``u`` depends on ``v``. Graphs are simple:
self-loops are dropped and duplicate edges collapse to one. Every type
here is frozen and every function is pure, so values can be shared and
cached freely.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InputError

__all__ = [
    "DEFAULT_MODULE",
    "DependencyGraph",
    "ModulePartition",
    "build_graph",
    "largest_connected_component",
    "module_label",
    "partition_from_names",
    "symmetrize",
]

# Module label for class names that carry no package prefix. Angle
# brackets cannot appear in a Java package name, so this never collides.
DEFAULT_MODULE = "<default>"


@dataclass(frozen=True)
class DependencyGraph:
    """Directed simple graph over string node identifiers.

    ``nodes`` is lexicographically sorted and ``edges`` is sorted by
    (source, target), so equal graphs compare equal and serialize
    byte-identically regardless of construction order. Build instances
    through :func:`build_graph`, which normalizes raw edge records.
    """

    nodes: tuple[str, ...] = ()
    edges: tuple[tuple[str, str], ...] = ()

    @cached_property
    def node_set(self) -> frozenset[str]:
        return frozenset(self.nodes)

    @cached_property
    def edge_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.edges)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, source: str, target: str) -> bool:
        return (source, target) in self.edge_set


def _checked_name(name: object, record: object) -> str:
    if not isinstance(name, str) or not name:
        raise InputError(
            f"node name must be a non-empty string, got {name!r} in record {record!r}"
        )
    return name


def build_graph(
    edges: Iterable[tuple[str, str]],
    extra_nodes: Iterable[str] = (),
) -> DependencyGraph:
    """Normalize raw dependency records into a :class:`DependencyGraph`.

    Duplicate records collapse, self-dependencies are dropped, and names
    listed in ``extra_nodes`` are kept as nodes even when isolated. The
    result does not depend on input order.
    """
    nodes: set[str] = set()
    edge_set: set[tuple[str, str]] = set()
    for record in edges:
        try:
            source, target = record
        except (TypeError, ValueError):
            raise InputError(
                f"edge record must be a (source, target) pair, got {record!r}"
            ) from None
        source = _checked_name(source, record)
        target = _checked_name(target, record)
        nodes.add(source)
        nodes.add(target)
        if source != target:
            edge_set.add((source, target))
    for name in extra_nodes:
        nodes.add(_checked_name(name, name))
    return DependencyGraph(nodes=tuple(sorted(nodes)), edges=tuple(sorted(edge_set)))


def symmetrize(graph: DependencyGraph) -> DependencyGraph:
    """Graph with every edge mirrored, i.e. direction forgotten."""
    mirrored = set(graph.edges)
    mirrored.update((v, u) for u, v in graph.edges)
    return DependencyGraph(nodes=graph.nodes, edges=tuple(sorted(mirrored)))


def largest_connected_component(graph: DependencyGraph) -> DependencyGraph:
    """Induced subgraph on the largest weakly connected node set.

    Reachability ignores edge direction. Ties between equal-sized
    components go to the component containing the lexicographically
    smallest node, so the choice is deterministic. The empty graph maps
    to itself.
    """
    if not graph.nodes:
        return graph
    neighbors: dict[str, set[str]] = {node: set() for node in graph.nodes}
    for u, v in graph.edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    components: list[set[str]] = []
    seen: set[str] = set()
    for start in graph.nodes:
        if start in seen:
            continue
        component = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for other in neighbors[current]:
                if other not in seen:
                    seen.add(other)
                    component.add(other)
                    queue.append(other)
        components.append(component)
    best = min(components, key=lambda c: (-len(c), min(c)))
    # Both endpoints of an edge share a weak component, so testing the
    # source suffices; filtering a sorted tuple keeps it sorted.
    return DependencyGraph(
        nodes=tuple(sorted(best)),
        edges=tuple(e for e in graph.edges if e[0] in best),
    )


@dataclass(frozen=True)
class ModulePartition:
    """Total assignment of nodes to module labels.

    ``module_index`` lists the distinct labels in lexicographic order
    and defines the label-to-integer mapping used by exports and mixing
    matrices. Build instances through :meth:`from_assignment`.
    """

    assignment: Mapping[str, str]
    module_index: tuple[str, ...]

    @classmethod
    def from_assignment(cls, assignment: Mapping[str, str]) -> "ModulePartition":
        for node, label in assignment.items():
            _checked_name(node, (node, label))
            if not isinstance(label, str) or not label:
                raise InputError(
                    f"module label must be a non-empty string, got {label!r} for node {node!r}"
                )
        return cls(
            assignment=dict(sorted(assignment.items())),
            module_index=tuple(sorted(set(assignment.values()))),
        )

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.module_index)}

    @property
    def module_count(self) -> int:
        return len(self.module_index)

    def label_of(self, node: str) -> str:
        try:
            return self.assignment[node]
        except KeyError:
            raise InputError(f"node {node!r} missing from partition") from None

    def index_of(self, label: str) -> int:
        return self._positions[label]

    def restricted_to(self, nodes: Iterable[str]) -> "ModulePartition":
        """Partition filtered to ``nodes``, labels re-indexed over survivors."""
        keep = set(nodes)
        return ModulePartition.from_assignment(
            {node: label for node, label in self.assignment.items() if node in keep}
        )


def module_label(name: str, depth: int | None = None) -> str:
    """Module label of one class name: its package prefix.

    With ``depth`` the prefix is truncated to its first ``depth``
    dot-separated segments. Names without a dot belong to the reserved
    ``<default>`` module.
    """
    if depth is not None and depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if "." not in name:
        return DEFAULT_MODULE
    package = name.rsplit(".", 1)[0]
    if depth is not None:
        package = ".".join(package.split(".")[:depth])
    return package


def partition_from_names(
    graph: DependencyGraph, depth: int | None = None
) -> ModulePartition:
    """Package partition implied by the node names themselves.

    Each node's label is everything before its final dot. ``depth``
    coarsens the partition by keeping only the leading package segments,
    so ``depth=1`` merges ``com.a`` and ``com.b`` into ``com``.
    """
    return ModulePartition.from_assignment(
        {node: module_label(node, depth) for node in graph.nodes}
    )
