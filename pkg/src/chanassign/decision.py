"""Does a proper assignment of span at most ``s`` exist?

The answer is the sign of an inclusion-exclusion sum over ground sets ``X``.
Each term counts tuples of vertex sets ``(I_1, ..., I_s)`` lying in ``X`` that
are proper and pairwise disjoint within every run of ``ell`` consecutive sets.
Such tuples are counted by a DP over the last ``ell - 1`` sets (the window),
with one fast zeta transform per layer.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _windows
from ._windows import WorkCounter
from .instance import Instance, span_upper_bound
from .subsetalg import members, popcount

__all__ = [
    "WorkCounter",
    "DPLayer",
    "encode_window",
    "decode_window",
    "window_is_proper",
    "proper_frontier",
    "tuples_count",
    "dp_layers",
    "covering_tuples",
    "decide_span",
    "min_span",
]


@dataclass(frozen=True)
class DPLayer:
    """Counts for channel position ``i``, indexed by window state.

    ``values`` has one entry per state, or shape ``(max_size + 1, n_states)``
    when the layer is stratified by total set size.
    """

    i: int
    values: np.ndarray


def encode_window(window: Sequence[int], ground: int, ell: int) -> int:
    """Index of the window ``(J_1, ..., J_{ell-1})`` among states over ``ground``."""
    if len(window) != ell - 1:
        raise ValueError(f"a window has {ell - 1} sets, got {len(window)}")
    index = 0
    for pos, v in enumerate(members(ground)):
        digit = 0
        for j, part in enumerate(window, start=1):
            if part >> v & 1:
                if digit:
                    raise ValueError(f"vertex {v} lies in two window sets")
                digit = j
        index += digit * ell**pos
    union = 0
    for part in window:
        union |= part
    if union & ~ground:
        raise ValueError("window sets must lie in the ground set")
    return index


def decode_window(index: int, ground: int, ell: int) -> tuple[int, ...]:
    parts = [0] * (ell - 1)
    for v in members(ground):
        index, digit = divmod(index, ell)
        if digit:
            parts[digit - 1] |= 1 << v
    if index:
        raise ValueError("state index out of range")
    return tuple(parts)


def window_is_proper(inst: Instance, window: Sequence[int]) -> bool:
    """Pairs in ``J_i`` and ``J_j`` (``i <= j``) must satisfy ``j - i >= w``.

    With ``i == j`` this forces every window set to be weight-0 independent.
    """
    w = inst.weights
    for i, a in enumerate(window):
        for j in range(i, len(window)):
            for x in members(a):
                for y in members(window[j]):
                    if x != y and j - i < w[x, y]:
                        return False
    return True


def proper_frontier(inst: Instance, window: Sequence[int]) -> int:
    """Vertices that may occupy the channel just before ``J_1``."""
    w = inst.weights
    union = 0
    for part in window:
        union |= part
    out = 0
    for v in range(inst.n):
        if union >> v & 1:
            continue
        if all(j >= w[v, x] for j, part in enumerate(window, start=1) for x in members(part)):
            out |= 1 << v
    return out


def _effective_ell(inst: Instance, ell: int | None) -> int:
    if ell is None:
        return inst.ell
    if ell < inst.ell:
        raise ValueError(f"ell={ell} is below the instance's maximum weight {inst.ell}")
    return ell


def _check_span(s: int):
    if int(s) != s or s < 1:
        raise ValueError(f"span must be a positive integer, got {s!r}")


def tuples_count(inst: Instance, X: int, s: int, *, ell: int | None = None,
                 counter: WorkCounter | None = None) -> int:
    """Number of tuples of the relaxed universe of length ``s`` lying in ``X``.

    ``ell`` may be raised above the instance's maximum weight; the universe
    then uses longer disjointness windows.
    """
    _check_span(s)
    if X & ~((1 << inst.n) - 1):
        raise ValueError("X contains vertices outside the instance")
    ell = _effective_ell(inst, ell)
    if ell <= 1:
        xs = members(X)
        counts = _windows.independent_counts(inst.weights[np.ix_(xs, xs)])
        return int(counts[:, -1].sum()) ** s
    return _windows.ground_term(inst.weights, ell, s, X, counter=counter)


def dp_layers(inst: Instance, X: int, s: int, *, max_size: int | None = None,
              ell: int | None = None, counter: WorkCounter | None = None) -> Iterator[DPLayer]:
    """The DP layers ``T_i`` over ground set ``X``, from ``i = min(s, ell-1)`` to ``s``."""
    _check_span(s)
    ell = _effective_ell(inst, ell)
    xs = members(X)
    space = _windows.WindowSpace(inst.weights[np.ix_(xs, xs)], ell)
    for i, values in _windows.iterate_layers(space, s, max_size=max_size, counter=counter):
        yield DPLayer(i, values)


def covering_tuples(inst: Instance, s: int, *, n_jobs: int = 1) -> int:
    """Number of tuples in the relaxed universe that cover every vertex."""
    _check_span(s)
    return _windows.inclusion_exclusion(inst.weights, inst.ell, s, n_jobs=n_jobs)


def decide_span(inst: Instance, s: int, *, n_jobs: int = 1) -> bool:
    """True iff some proper assignment uses only channels ``1..s``."""
    _check_span(s)
    if inst.ell == 0:
        return True
    return covering_tuples(inst, s, n_jobs=n_jobs) > 0


def min_span(inst: Instance, *, n_jobs: int = 1) -> int:
    """Smallest feasible span, by binary search up to :func:`span_upper_bound`."""
    lo, hi = inst.ell + 1, span_upper_bound(inst)
    while lo < hi:
        mid = (lo + hi) // 2
        if decide_span(inst, mid, n_jobs=n_jobs):
            hi = mid
        else:
            lo = mid + 1
    return lo
