"""Extended decision with some channels fixed, and reconstruction of an assignment."""
from __future__ import annotations

from collections import Counter

import numpy as np

from . import _windows
from .decision import _check_span, decide_span
from .instance import Assignment, Instance, PartialAssignment

__all__ = ["position_masks", "extended_decide", "find_assignment"]


def _check_fixed(inst: Instance, fixed: PartialAssignment, s: int):
    for v, c in fixed.fixed.items():
        if v >= inst.n:
            raise ValueError(f"fixed vertex {v} outside 0..{inst.n - 1}")
        if not 1 <= c <= s:
            raise ValueError(f"vertex {v}: fixed channel {c} outside 1..{s}")


def position_masks(inst: Instance, fixed: PartialAssignment, s: int) -> list[int]:
    """``masks[p]`` is the set of free vertices compatible with the fixed ones on
    channel ``p``; index 0 is unused."""
    _check_fixed(inst, fixed, s)
    w = inst.weights
    free = [v for v in range(inst.n) if v not in fixed.fixed]
    masks = [0] * (s + 1)
    for p in range(1, s + 1):
        for v in free:
            if all(abs(p - c) >= w[v, z] for z, c in fixed.fixed.items()):
                masks[p] |= 1 << v
    return masks


def extended_decide(inst: Instance, fixed: PartialAssignment, s: int, *,
                    n_jobs: int = 1) -> bool:
    """Is there a proper assignment of span at most ``s`` that agrees with ``fixed``?

    Work is exponential only in the number of free vertices.
    """
    _check_span(s)
    _check_fixed(inst, fixed, s)
    w = inst.weights
    items = list(fixed.fixed.items())
    for a, (z, c) in enumerate(items):
        for z2, c2 in items[a + 1:]:
            if abs(c - c2) < w[z, z2]:
                return False
    free = [v for v in range(inst.n) if v not in fixed.fixed]
    if not free:
        return True
    masks = position_masks(inst, fixed, s)
    local = [sum(1 << i for i, v in enumerate(free) if m >> v & 1) for m in masks]
    if any(not any(m >> i & 1 for m in local[1:]) for i in range(len(free))):
        return False
    w_free = w[np.ix_(free, free)]
    ell = int(w_free.max()) if len(free) > 1 else 0
    total = _windows.inclusion_exclusion(w_free, ell, s, masks=local, target=len(free),
                                         n_jobs=n_jobs)
    return total > 0


def find_assignment(inst: Instance, s: int, *, n_jobs: int = 1,
                    stats: Counter | None = None) -> Assignment | None:
    """Lexicographically smallest proper assignment of span at most ``s``.

    Vertices are fixed in index order, each to the smallest channel that still
    extends to a full assignment.  ``stats["extended_decide"]`` counts probes.
    """
    _check_span(s)
    if not decide_span(inst, s, n_jobs=n_jobs):
        return None
    fixed = PartialAssignment()
    for v in range(inst.n):
        for c in range(1, s + 1):
            trial = fixed.extend(v, c)
            if stats is not None:
                stats["extended_decide"] += 1
            if extended_decide(inst, trial, s, n_jobs=n_jobs):
                fixed = trial
                break
        else:
            raise AssertionError(f"no channel for vertex {v} although span {s} is feasible")
    return Assignment(tuple(fixed.fixed[v] for v in range(inst.n)), s)
