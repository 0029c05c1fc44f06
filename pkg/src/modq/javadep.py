"""Heuristic class-dependency extraction from Java source trees.

This is a lexical scanner, not a compiler. Per file it strips comments
and string/character literals, reads the package declaration and the
imports, locates the top-level type declarations, and collects the
capitalized identifiers each type's body mentions. Identifiers are then
resolved against the snapshot's own types only (closed world): imports
of external libraries never create nodes or edges.

Resolution precedence per referenced identifier, first hit wins:

1. a type declared in the same compilation unit (no edge),
2. a single-type import whose last segment matches,
3. a type in the same package,
4. a unique match among wildcard-imported snapshot packages.

A wildcard match that is ambiguous (two or more snapshot packages
declare the name) yields no edge and is counted separately. Anything
left is counted unresolved.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .depgraph import DependencyGraph, ModulePartition, build_graph, partition_from_names
from .errors import InputError

__all__ = [
    "CompilationUnit",
    "ScanResult",
    "SnapshotGraph",
    "extract_snapshot",
    "resolve_dependencies",
    "scan_snapshot",
]

_PACKAGE_RE = re.compile(
    r"^\s*package\s+([A-Za-z_$][\w$]*(?:\.[\w$]+)*)\s*;", re.MULTILINE
)
_IMPORT_RE = re.compile(
    r"^\s*import\s+(static\s+)?([A-Za-z_$][\w$]*(?:\.[\w$]+)*)(\.\*)?\s*;",
    re.MULTILINE,
)
# (?<!@) keeps annotation declarations (@interface) out.
_TYPE_DECL_RE = re.compile(
    r"(?<!@)\b(?:class|interface|enum|record)\s+([A-Za-z_$][\w$]*)"
)
_IDENT_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")


@dataclass(frozen=True)
class CompilationUnit:
    """What the scanner keeps from one ``.java`` file."""

    path: Path
    package: str
    declared_types: tuple[str, ...]
    all_declared: frozenset[str]
    single_imports: tuple[str, ...]
    wildcard_imports: tuple[str, ...]
    referenced_identifiers: frozenset[str]
    references_by_type: Mapping[str, frozenset[str]]

    def qualified(self, simple_name: str) -> str:
        return f"{self.package}.{simple_name}" if self.package else simple_name


@dataclass(frozen=True)
class ScanResult:
    """Parsed units plus the files that could not be read as UTF-8."""

    units: tuple[CompilationUnit, ...]
    skipped: tuple[Path, ...]


@dataclass(frozen=True)
class SnapshotGraph:
    """Extraction output: graph, package partition, resolution counters."""

    graph: DependencyGraph
    partition: ModulePartition
    stats: Mapping[str, int]


def _strip_comments_and_literals(text: str) -> str:
    """Blank out comments and string/char literals, keeping newlines.

    Every replaced character becomes a space, so offsets and line
    numbers in the result match the original text exactly.
    """
    out = list(text)
    n = len(text)
    i = 0
    state = "code"
    while i < n:
        ch = text[i]
        nxt = text[i + 1] if i + 1 < n else ""
        if state == "code":
            if ch == "/" and nxt == "/":
                out[i] = out[i + 1] = " "
                state = "line"
                i += 2
            elif ch == "/" and nxt == "*":
                out[i] = out[i + 1] = " "
                state = "block"
                i += 2
            elif ch == '"':
                out[i] = " "
                state = "str"
                i += 1
            elif ch == "'":
                out[i] = " "
                state = "char"
                i += 1
            else:
                i += 1
        elif state == "line":
            if ch == "\n":
                state = "code"
            else:
                out[i] = " "
            i += 1
        elif state == "block":
            if ch == "*" and nxt == "/":
                out[i] = out[i + 1] = " "
                state = "code"
                i += 2
            else:
                if ch != "\n":
                    out[i] = " "
                i += 1
        else:  # inside a string or char literal
            quote = '"' if state == "str" else "'"
            if ch == "\\" and i + 1 < n:
                out[i] = " "
                if nxt != "\n":
                    out[i + 1] = " "
                i += 2
            else:
                if ch == quote:
                    out[i] = " "
                    state = "code"
                elif ch != "\n":
                    out[i] = " "
                i += 1
    return "".join(out)


def _top_level_groups(code: str) -> list[tuple[int, int]]:
    """(open, close) index pairs of depth-zero brace groups."""
    groups: list[tuple[int, int]] = []
    depth = 0
    open_idx = -1
    for i, ch in enumerate(code):
        if ch == "{":
            if depth == 0:
                open_idx = i
            depth += 1
        elif ch == "}" and depth > 0:
            depth -= 1
            if depth == 0:
                groups.append((open_idx, i))
    return groups


def _blank_spans(code: str, spans: list[tuple[int, int]]) -> str:
    buf = list(code)
    for start, end in spans:
        for k in range(start, end):
            if buf[k] != "\n":
                buf[k] = " "
    return "".join(buf)


def _parse_unit(text: str, path: Path) -> CompilationUnit:
    stripped = _strip_comments_and_literals(text)

    spans: list[tuple[int, int]] = []
    package = ""
    package_match = _PACKAGE_RE.search(stripped)
    if package_match:
        package = package_match.group(1)
        spans.append(package_match.span())

    single_imports: list[str] = []
    wildcard_imports: list[str] = []
    for match in _IMPORT_RE.finditer(stripped):
        spans.append(match.span())
        name = match.group(2)
        is_static = match.group(1) is not None
        is_wildcard = match.group(3) is not None
        if is_static:
            # Static imports pull members of a type: the type itself is
            # the dependency. "import static a.B.x;" names a.B, and the
            # wildcard form already ends at the type.
            single_imports.append(name if is_wildcard else name.rsplit(".", 1)[0])
        elif is_wildcard:
            wildcard_imports.append(name)
        else:
            single_imports.append(name)

    # Identifiers inside package/import statements are bookkeeping, not
    # references, so they are blanked before tokenizing.
    code = _blank_spans(stripped, spans)

    groups = _top_level_groups(code)
    all_declared: set[str] = set()
    top_level: list[tuple[int, str, tuple[int, int] | None]] = []
    for match in _TYPE_DECL_RE.finditer(code):
        name = match.group(1)
        all_declared.add(name)
        pos = match.start()
        if any(open_ < pos <= close for open_, close in groups):
            continue  # nested type, folded into its outer type
        body = next(((o, c) for o, c in groups if o >= pos), None)
        top_level.append((pos, name, body))

    # A file may hold several top-level types. Each one owns the slice
    # of the file from the end of the previous type's body to the end
    # of its own; the first slice starts at the top of the file and the
    # last runs to the end, so nothing is left unattributed.
    references_by_type: dict[str, frozenset[str]] = {}
    declared_order: list[str] = []
    prev_end = 0
    for k, (pos, name, body) in enumerate(top_level):
        declared_order.append(name)
        if k == len(top_level) - 1 or body is None:
            end = len(code)
        else:
            end = body[1] + 1
        found = {
            m.group(0)
            for m in _IDENT_RE.finditer(code, prev_end, end)
            if m.group(0)[0].isupper()
        }
        references_by_type[name] = frozenset(found)
        prev_end = end

    referenced: frozenset[str] = (
        frozenset().union(*references_by_type.values())
        if references_by_type
        else frozenset()
    )
    return CompilationUnit(
        path=path,
        package=package,
        declared_types=tuple(declared_order),
        all_declared=frozenset(all_declared),
        single_imports=tuple(single_imports),
        wildcard_imports=tuple(wildcard_imports),
        referenced_identifiers=referenced,
        references_by_type=references_by_type,
    )


def scan_snapshot(root: Path | str) -> ScanResult:
    """Parse every ``.java`` file under ``root``.

    Files that cannot be read or are not valid UTF-8 are skipped and
    reported, not fatal: real snapshots contain stray binaries. Paths
    in the result are relative to ``root`` and sorted.
    """
    root = Path(root)
    if not root.is_dir():
        raise InputError(f"{root}: not a directory")
    units: list[CompilationUnit] = []
    skipped: list[Path] = []
    for path in sorted(root.rglob("*.java")):
        if not path.is_file():
            continue
        relative = path.relative_to(root)
        try:
            text = path.read_text(encoding="utf-8")
        except (UnicodeDecodeError, OSError):
            skipped.append(relative)
            continue
        units.append(_parse_unit(text, relative))
    return ScanResult(units=tuple(units), skipped=tuple(skipped))


def resolve_dependencies(scan: ScanResult) -> SnapshotGraph:
    """Resolve every unit's references into a class-dependency graph.

    All top-level types of the snapshot become nodes, isolated or not.
    Two units declaring the same fully qualified type is an error that
    names both files. Counters in ``stats``: ``resolved`` includes
    same-unit hits; ``external`` counts single imports that point
    outside the snapshot; ``ambiguous`` counts wildcard collisions.
    """
    owner: dict[str, Path] = {}
    by_package: dict[str, dict[str, str]] = {}
    for unit in scan.units:
        for simple in unit.declared_types:
            fqn = unit.qualified(simple)
            if fqn in owner and owner[fqn] != unit.path:
                raise InputError(
                    f"type {fqn} declared in both {owner[fqn]} and {unit.path}"
                )
            owner[fqn] = unit.path
            by_package.setdefault(unit.package, {})[simple] = fqn

    internal = set(owner)
    resolved = external = unresolved = ambiguous = 0
    edges: list[tuple[str, str]] = []
    for unit in scan.units:
        for simple in unit.declared_types:
            source = unit.qualified(simple)
            for ident in sorted(unit.references_by_type[simple]):
                if ident in unit.all_declared:
                    resolved += 1
                    continue
                imported = next(
                    (
                        fqn
                        for fqn in unit.single_imports
                        if fqn.rsplit(".", 1)[-1] == ident
                    ),
                    None,
                )
                if imported is not None:
                    if imported in internal:
                        resolved += 1
                        edges.append((source, imported))
                    else:
                        external += 1
                    continue
                same_package = by_package.get(unit.package, {}).get(ident)
                if same_package is not None:
                    resolved += 1
                    edges.append((source, same_package))
                    continue
                candidates = sorted(
                    {
                        by_package[pkg][ident]
                        for pkg in unit.wildcard_imports
                        if ident in by_package.get(pkg, {})
                    }
                )
                if len(candidates) == 1:
                    resolved += 1
                    edges.append((source, candidates[0]))
                elif len(candidates) > 1:
                    ambiguous += 1
                else:
                    unresolved += 1

    graph = build_graph(edges, extra_nodes=internal)
    stats = {
        "files_parsed": len(scan.units),
        "files_skipped": len(scan.skipped),
        "resolved": resolved,
        "external": external,
        "unresolved": unresolved,
        "ambiguous": ambiguous,
    }
    return SnapshotGraph(
        graph=graph, partition=partition_from_names(graph), stats=stats
    )


def extract_snapshot(root: Path | str) -> SnapshotGraph:
    """Scan and resolve one source tree in a single call."""
    return resolve_dependencies(scan_snapshot(root))
