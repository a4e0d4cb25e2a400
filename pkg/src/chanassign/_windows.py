"""Vectorised window dynamic programme shared by the decision, counting and
extended solvers, plus the independent-set path used when ``ell <= 1``.

All functions here work on a *local* weight matrix whose vertices are
``0..k-1``; callers translate vertex sets of the full instance.

State encoding: a window ``(J_1, ..., J_{ell-1})`` of pairwise disjoint sets
over ``k`` local vertices is the base-``ell`` number whose digit at position
``p`` is ``j`` when vertex ``p`` lies in ``J_j`` and 0 when it lies in none.
``J_{ell-1}`` sits on the latest channel.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np
from joblib import Parallel, delayed

from .subsetalg import digit_sweep, members

INT64_SAFE = 2**62


@dataclass
class WorkCounter:
    """Work done by the window DP: cells written per layer and zeta additions."""

    layer_cells: list = field(default_factory=list)
    zeta_additions: int = 0


def occupancy_patterns(s: int, ell: int) -> int:
    """Number of subsets of ``1..s`` whose elements are pairwise at least ``ell`` apart.

    A vertex of a tuple in the relaxed universe occupies such a set of
    positions, so ``occupancy_patterns(s, ell) ** k`` bounds every DP value.
    """
    ell = max(ell, 1)
    a = [1] * (s + 1)
    for m in range(1, s + 1):
        a[m] = a[m - 1] + (a[m - ell] if m >= ell else 1)
    return a[s]


def value_dtype(k: int, s: int, ell: int):
    return np.int64 if occupancy_patterns(s, ell) ** k < INT64_SAFE else object


class WindowSpace:
    """Per-state tables for all ``ell**k`` windows over ``k`` local vertices."""

    def __init__(self, w: np.ndarray, ell: int):
        if ell < 2:
            raise ValueError("window DP needs ell >= 2")
        w = np.asarray(w, dtype=np.int64)
        k = w.shape[0]
        if w.size and w.max() > ell:
            raise ValueError(f"weights exceed ell={ell}")
        self.k, self.ell = k, ell
        self.n_states = n_states = ell**k
        self.powers = pw = ell ** np.arange(k, dtype=np.int64)
        idx = np.arange(n_states, dtype=np.int64)
        digits = (idx[None, :] // pw[:, None]) % ell
        self.digits = digits

        proper = np.ones(n_states, dtype=bool)
        in_front = digits == 0
        for p in range(k):
            for q in range(k):
                x = w[p, q]
                if x == 0 or p == q:
                    continue
                dq = digits[q]
                if p < q:
                    dp = digits[p]
                    proper &= ~((dp > 0) & (dq > 0) & (np.abs(dp - dq) < x))
                if x >= 2:
                    # p may precede the window only if every q in J_j has j >= w(p, q)
                    in_front[p] &= ~((dq > 0) & (dq < x))
        self.proper = proper
        self.in_front = in_front

        # digits of the predecessor window (S, J_1, ..., J_{ell-2}) with S = frontier
        shifted = np.where((digits >= 1) & (digits <= ell - 2), digits + 1, 0)
        self.lookup = pw @ shifted + pw @ in_front.astype(np.int64)
        self.is_last = digits == ell - 1
        self.last_size = self.is_last.sum(axis=0)
        self.size = (digits > 0).sum(axis=0)


def iterate_layers(space: WindowSpace, s: int, *, masks: Sequence[int] | None = None,
                   max_size: int | None = None, dtype=None,
                   counter: WorkCounter | None = None) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(i, T_i)`` for the layers of the window DP up to ``i = s``.

    Without ``max_size`` each ``T_i`` has one entry per window state and counts
    the tuples of the relaxed universe ending in that window.  With
    ``max_size`` it has shape ``(max_size + 1, n_states)`` and row ``m`` counts
    those tuples whose set sizes sum to ``m``.

    ``masks[pos]`` (positions ``1..s``) restricts which local vertices may
    appear on channel ``pos``; each set is checked once, when it enters the
    window.  For ``s < ell - 1`` the first window positions fall before
    channel 1 and must stay empty.
    """
    ell, k, n_states = space.ell, space.k, space.n_states
    if dtype is None:
        dtype = value_dtype(k, s, ell)
    i0 = min(s, ell - 1)

    allowed = np.ones((k, ell), dtype=bool)
    for j in range(1, ell):
        pos = i0 - (ell - 1) + j
        for p in range(k):
            allowed[p, j] = pos >= 1 and (masks is None or bool(masks[pos] >> p & 1))
    ok = space.proper & np.take_along_axis(allowed, space.digits, axis=1).all(axis=0)

    if max_size is None:
        table = ok.astype(dtype)
    else:
        table = np.zeros((max_size + 1, n_states), dtype=dtype)
        cols = np.nonzero(ok & (space.size <= max_size))[0]
        table[space.size[cols], cols] = 1
        rows = np.arange(max_size + 1)[:, None] - space.last_size[None, :]
        valid = rows >= 0
        flat_idx = np.where(valid, rows * n_states + space.lookup[None, :], 0)
    yield i0, table

    for i in range(i0 + 1, s + 1):
        zeta = np.ascontiguousarray(table).copy()
        adds = digit_sweep(zeta, ell, k)
        layer_ok = space.proper
        if masks is not None:
            banned = [p for p in range(k) if not masks[i] >> p & 1]
            if banned:
                layer_ok = layer_ok & ~space.is_last[banned].any(axis=0)
        if max_size is None:
            table = zeta[space.lookup]
            table[~layer_ok] = 0
        else:
            table = zeta.reshape(-1)[flat_idx]
            table[~valid] = 0
            table[:, ~layer_ok] = 0
        if counter is not None:
            counter.layer_cells.append(table.shape[-1])
            counter.zeta_additions += adds
        yield i, table


def window_total(w: np.ndarray, ell: int, s: int, *, masks=None, target=None,
                 counter=None) -> int:
    """Tuples of the relaxed universe over all ``k`` local vertices (exact int).

    With ``target`` only tuples whose set sizes sum to ``target`` count.
    """
    space = WindowSpace(w, ell)
    table = None
    for _, table in iterate_layers(space, s, masks=masks, max_size=target, counter=counter):
        pass
    if target is not None:
        table = table[target]
    if table.dtype == object:
        return int(sum(table.tolist()))
    # distinct states count distinct tuples, so the sum obeys the same bound
    return int(table.sum())


# --------------------------------------------------------------------------
# ell <= 1: every set of a tuple is independent and overlaps are unrestricted


def independent_counts(w: np.ndarray) -> np.ndarray:
    """``out[m, X]`` = number of weight-0-independent ``m``-subsets of local set ``X``."""
    w = np.asarray(w)
    k = w.shape[0]
    size = 1 << k
    indep = np.zeros(size, dtype=bool)
    pc = np.zeros(size, dtype=np.int64)
    indep[0] = True
    for v in range(k):
        lo = 1 << v
        nbr = sum(1 << u for u in range(v) if w[u, v] > 0)
        sub = np.arange(lo)
        indep[lo:2 * lo] = indep[:lo] & ((sub & nbr) == 0)
        pc[lo:2 * lo] = pc[:lo] + 1
    out = np.zeros((k + 1, size), dtype=np.int64)
    out[pc, np.arange(size)] = indep
    digit_sweep(out, 2, k)
    return out


def independent_total(w: np.ndarray, s: int, *, masks=None, target=None) -> int:
    """Signed inclusion-exclusion sum for ``ell <= 1`` over all local ground sets.

    A tuple lying in ``X`` picks, for each channel ``p``, an independent
    subset of ``X`` (within ``masks[p]``).  Without ``target`` the term for
    ``X`` is the product of the per-channel counts; with it, the coefficient
    of ``t**target`` in the product of their size polynomials.
    """
    w = np.asarray(w)
    k = w.shape[0]
    counts = independent_counts(w)
    xs = np.arange(1 << k)
    full = (1 << k) - 1
    if target is None:
        ind = counts.sum(axis=0).astype(object)
        if masks is None:
            terms = ind ** s
        else:
            terms = np.ones(1 << k, dtype=object)
            for p in range(1, s + 1):
                terms = terms * ind[xs & (masks[p] & full)]
    else:
        polys = np.zeros((target + 1, 1 << k), dtype=object)
        rows = min(target, k) + 1
        polys[:rows] = counts[:rows].astype(object)
        acc = np.zeros((target + 1, 1 << k), dtype=object)
        acc[0] = 1
        for p in range(1, s + 1):
            factor = polys if masks is None else polys[:, xs & (masks[p] & full)]
            nxt = np.zeros_like(acc)
            for a in range(target + 1):
                for b in range(target + 1 - a):
                    nxt[a + b] += acc[a] * factor[b]
            acc = nxt
        terms = acc[target]
    parity = np.array([bin(x).count("1") for x in range(1 << k)]) % 2
    odd = (parity != k % 2)
    return int(sum(terms[~odd])) - int(sum(terms[odd]))


# --------------------------------------------------------------------------
# inclusion-exclusion over ground sets


def ground_term(w: np.ndarray, ell: int, s: int, ground: int, *, masks=None,
                target=None, counter=None) -> int:
    """Window-DP tuple count for the local ground set ``ground``."""
    xs = members(ground)
    wl = w[np.ix_(xs, xs)]
    local_masks = None
    if masks is not None:
        local_masks = [0] * (s + 1)
        for pos in range(1, s + 1):
            local_masks[pos] = sum(1 << i for i, v in enumerate(xs) if masks[pos] >> v & 1)
    return window_total(wl, ell, s, masks=local_masks, target=target, counter=counter)


def _block_sum(w, ell, s, lo, hi, masks, target) -> int:
    k = w.shape[0]
    total = 0
    for ground in range(lo, hi):
        term = ground_term(w, ell, s, ground, masks=masks, target=target)
        if (k - bin(ground).count("1")) % 2:
            total -= term
        else:
            total += term
    return total


def inclusion_exclusion(w: np.ndarray, ell: int, s: int, *, masks=None, target=None,
                        n_jobs: int = 1) -> int:
    """``sum over X of (-1)^(k-|X|) * tuples lying in X`` for local vertices ``0..k-1``.

    Ground sets are visited in increasing numeric order; with ``n_jobs > 1``
    contiguous blocks are summed by separate workers.  Exact integer addition
    makes the result independent of ``n_jobs``.
    """
    w = np.asarray(w, dtype=np.int64)
    k = w.shape[0]
    if ell <= 1:
        return independent_total(w, s, masks=masks, target=target)
    size = 1 << k
    if n_jobs == 1 or size < 64:
        return _block_sum(w, ell, s, 0, size, masks, target)
    n_blocks = min(size, 32)
    bounds = [size * b // n_blocks for b in range(n_blocks + 1)]
    parts = Parallel(n_jobs=n_jobs)(
        delayed(_block_sum)(w, ell, s, lo, hi, masks, target)
        for lo, hi in zip(bounds, bounds[1:]))
    return sum(parts)
