"""Mixing matrix and the directed modularity score.

The score is the assortative-mixing coefficient for a categorical node
attribute (Newman, Phys. Rev. E 67, 026126, 2003), with the attribute
taken to be module membership:

    Q = (sum_i e_ii - sum_i a_i b_i) / (1 - sum_i a_i b_i)

where ``e[i][j]`` is the fraction of all edges that run from module
``i`` to module ``j``, ``a`` holds the row sums of ``e`` and ``b`` the
column sums. Q lies in [-1, 1]. Two degenerate inputs score 0 by
convention: a graph with no edges, and a graph whose every edge sits
inside one single module (there the denominator vanishes).

Counting is integral. Edge counts accumulate as Python ints and the
score is produced by one final float division, so the result is exact
up to that single rounding no matter how large the graph is.
"""

from __future__ import annotations

from dataclasses import dataclass

from .depgraph import DependencyGraph, ModulePartition, partition_from_names, symmetrize
from .errors import EmptyGraphError, InputError

__all__ = [
    "MODES",
    "MixingMatrix",
    "ModularityScore",
    "mixing_matrix",
    "modularity_q",
    "q_at_depth",
]

MODES = ("directed", "undirected")

# Guards the division when float margins are consulted; the structural
# concentration test below catches the semantic case exactly.
_DEGENERACY_GUARD = 1e-12


@dataclass(frozen=True)
class MixingMatrix:
    """Edge fractions between ordered module pairs, with margins.

    ``e[i][j]`` is the fraction of edges from module ``i`` to module
    ``j``; ``a[i]`` and ``b[i]`` are its row and column sums. Module
    order follows ``labels``. Modules without nodes or edges are kept
    and simply contribute zero rows and columns.
    """

    e: tuple[tuple[float, ...], ...]
    a: tuple[float, ...]
    b: tuple[float, ...]
    n: int
    labels: tuple[str, ...]


@dataclass(frozen=True)
class ModularityScore:
    """Score plus the quantities a reader needs to interpret it."""

    q: float
    degenerate: bool
    intra_fraction: float
    null_expectation: float


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _count_matrix(
    graph: DependencyGraph, partition: ModulePartition
) -> tuple[dict[tuple[int, int], int], list[int], list[int]]:
    """Integer edge counts between modules plus row and column totals."""
    for node in graph.nodes:
        if node not in partition.assignment:
            raise InputError(f"node {node!r} missing from partition")
    index = {label: i for i, label in enumerate(partition.module_index)}
    size = partition.module_count
    counts: dict[tuple[int, int], int] = {}
    rows = [0] * size
    cols = [0] * size
    for u, v in graph.edges:
        i = index[partition.assignment[u]]
        j = index[partition.assignment[v]]
        counts[(i, j)] = counts.get((i, j), 0) + 1
        rows[i] += 1
        cols[j] += 1
    return counts, rows, cols


def mixing_matrix(
    graph: DependencyGraph, partition: ModulePartition
) -> MixingMatrix:
    """Fractions of edges between every ordered pair of modules.

    Raises :class:`EmptyGraphError` when the graph has no edges, since
    fractions of zero edges are undefined; raises :class:`InputError`
    when some node has no module, naming that node.
    """
    counts, rows, cols = _count_matrix(graph, partition)
    m = graph.edge_count
    if m == 0:
        raise EmptyGraphError("graph has no edges; edge fractions are undefined")
    size = partition.module_count
    e = tuple(
        tuple(counts.get((i, j), 0) / m for j in range(size)) for i in range(size)
    )
    return MixingMatrix(
        e=e,
        a=tuple(r / m for r in rows),
        b=tuple(c / m for c in cols),
        n=size,
        labels=partition.module_index,
    )


def modularity_q(
    graph: DependencyGraph,
    partition: ModulePartition,
    mode: str = "directed",
) -> ModularityScore:
    """Coherence between a module partition and the edge structure.

    ``mode="undirected"`` scores the symmetrized graph, which counts
    every dependency in both directions. Degenerate inputs (no edges,
    or every edge inside one single module) score 0.0 with the
    ``degenerate`` flag set rather than raising.
    """
    _check_mode(mode)
    if mode == "undirected":
        graph = symmetrize(graph)
    counts, rows, cols = _count_matrix(graph, partition)
    m = graph.edge_count
    if m == 0:
        return ModularityScore(
            q=0.0, degenerate=True, intra_fraction=0.0, null_expectation=0.0
        )
    intra = sum(c for (i, j), c in counts.items() if i == j)
    null = sum(r * c for r, c in zip(rows, cols))
    intra_fraction = intra / m
    null_expectation = null / (m * m)
    # The structural test must run first: whether all edges share one
    # module is a fact about integers, not something to infer from a
    # float landing near 1.0.
    concentrated = any(i == j and c == m for (i, j), c in counts.items())
    if concentrated or abs(1.0 - null_expectation) < _DEGENERACY_GUARD:
        return ModularityScore(
            q=0.0,
            degenerate=True,
            intra_fraction=intra_fraction,
            null_expectation=null_expectation,
        )
    q = (m * intra - null) / (m * m - null)
    return ModularityScore(
        q=q,
        degenerate=False,
        intra_fraction=intra_fraction,
        null_expectation=null_expectation,
    )


def q_at_depth(
    graph: DependencyGraph, depth: int, mode: str = "directed"
) -> ModularityScore:
    """Score the package partition truncated to ``depth`` leading segments."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    return modularity_q(graph, partition_from_names(graph, depth=depth), mode=mode)
