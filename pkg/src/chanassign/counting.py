"""Exact number of proper assignments of span at most ``s``.

Same inclusion-exclusion as :mod:`chanassign.decision`, but the DP also tracks
the total size of the sets in a tuple.  Tuples that cover every vertex and
have total size ``n`` use each vertex exactly once, i.e. they are assignments.
"""
from __future__ import annotations

from . import _windows
from .decision import _check_span
from .instance import Instance

__all__ = ["count_assignments"]


def count_assignments(inst: Instance, s: int, *, n_jobs: int = 1) -> int:
    """Number of proper maps ``V -> {1..s}``."""
    _check_span(s)
    if inst.ell == 0:
        return s**inst.n
    return _windows.inclusion_exclusion(inst.weights, inst.ell, s, target=inst.n, n_jobs=n_jobs)
