from __future__ import annotations

import random
from pathlib import Path

import pytest

from modq import (
    DependencyGraph,
    ModulePartition,
    build_graph,
    partition_from_names,
)

FIXTURES = Path(__file__).parent / "fixtures"

# Five directed edges over two packages; q works out to exactly 8/13.
FIVE_EDGES = [
    ("a.X", "a.Y"),
    ("a.Y", "a.X"),
    ("a.X", "b.U"),
    ("b.U", "b.V"),
    ("b.V", "b.U"),
]

# Two directed triangles joined by a single bridge; symmetrized and
# scored against the two-module split this gives exactly 5/7.
TRIANGLE_EDGES = [
    ("a.1", "a.2"),
    ("a.2", "a.3"),
    ("a.3", "a.1"),
    ("b.1", "b.2"),
    ("b.2", "b.3"),
    ("b.3", "b.1"),
    ("a.1", "b.1"),
]


@pytest.fixture
def five_edge_graph() -> tuple[DependencyGraph, ModulePartition]:
    graph = build_graph(FIVE_EDGES)
    return graph, partition_from_names(graph)


@pytest.fixture
def triangle_graph() -> tuple[DependencyGraph, ModulePartition]:
    graph = build_graph(TRIANGLE_EDGES)
    return graph, partition_from_names(graph)


@pytest.fixture
def javaproj() -> Path:
    return FIXTURES / "javaproj"


def expected_java_edges() -> list[tuple[str, str]]:
    """The hand-enumerated dependency set for the javaproj fixture."""
    edges = []
    for line in (FIXTURES / "javaproj-edges.tsv").read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        source, target = line.split("\t")
        edges.append((source, target))
    return edges


def random_graph_and_partition(
    rng: random.Random, max_nodes: int = 8, max_modules: int = 4
) -> tuple[DependencyGraph, ModulePartition]:
    """Small random directed graph with a random module assignment.

    Used wherever the production scorer is compared against the
    brute-force one; kept in conftest so every comparison draws from
    the same distribution.
    """
    node_count = 1 + int(rng.random() * max_nodes)
    nodes = [f"n{idx}" for idx in range(node_count)]
    edges = []
    for u in nodes:
        for v in nodes:
            if u != v and rng.random() < 0.35:
                edges.append((u, v))
    graph = build_graph(edges, extra_nodes=nodes)
    modules = 1 + int(rng.random() * max_modules)
    assignment = {
        node: f"g{int(rng.random() * modules)}" for node in graph.nodes
    }
    return graph, ModulePartition.from_assignment(assignment)
