"""Exception types shared across the package."""

from __future__ import annotations


class ModqError(Exception):
    """Base class for every error this package raises on purpose."""


class InputError(ModqError):
    """Malformed or inconsistent user input: files, graphs, partitions."""


class EmptyGraphError(ModqError):
    """A zero-edge graph was passed where edge fractions are undefined.

    Callers that can assign a meaningful score to the empty case (the
    modularity scorer does) catch this and substitute their convention.
    """
