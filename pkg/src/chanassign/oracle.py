"""Exhaustive reference solvers.

These enumerate assignments (or set tuples) directly from the definitions and
share no code with the inclusion-exclusion solvers.  Enumeration is
odometer order with vertex 0 most significant; a partial assignment is
abandoned as soon as a placed pair violates its gap, which skips only
candidates that would fail anyway.
"""
from __future__ import annotations

import itertools

from .instance import Assignment, Instance, span_upper_bound
from .subsetalg import enumerate_subsets, members

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "brute_assignments",
    "brute_decide",
    "brute_count",
    "brute_find",
    "brute_tuples_count",
    "brute_min_span",
]

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The search space is larger than the configured candidate budget."""


def _check_budget(size: int, budget: int):
    if size > budget:
        raise BudgetExceeded(f"{size} candidates exceed the budget of {budget}")


def brute_assignments(inst: Instance, s: int, budget: int = DEFAULT_BUDGET):
    """Yield every proper assignment with channels in ``1..s``, lexicographically."""
    _check_budget(s**inst.n, budget)
    n = inst.n
    w = inst.weights.tolist()
    chan = [0] * n

    def place(v):
        if v == n:
            yield Assignment(tuple(chan), s)
            return
        wv = w[v]
        for c in range(1, s + 1):
            if all(abs(c - chan[u]) >= wv[u] for u in range(v)):
                chan[v] = c
                yield from place(v + 1)

    yield from place(0)


def brute_find(inst: Instance, s: int, budget: int = DEFAULT_BUDGET) -> Assignment | None:
    """Lexicographically smallest proper assignment of span at most ``s``."""
    return next(brute_assignments(inst, s, budget), None)


def brute_decide(inst: Instance, s: int, budget: int = DEFAULT_BUDGET) -> bool:
    return brute_find(inst, s, budget) is not None


def brute_count(inst: Instance, s: int, budget: int = DEFAULT_BUDGET) -> int:
    _check_budget(s**inst.n, budget)
    n = inst.n
    w = inst.weights.tolist()
    # constraints towards earlier vertices only; weight-0 pairs never bind
    earlier = [[(u, w[v][u]) for u in range(v) if w[v][u]] for v in range(n)]
    chan = [0] * n

    def place(v):
        cons = earlier[v]
        fits = [c for c in range(1, s + 1) if all(abs(c - chan[u]) >= x for u, x in cons)]
        if v == n - 1:
            return len(fits)
        total = 0
        for c in fits:
            chan[v] = c
            total += place(v + 1)
        return total

    return place(0)


def brute_min_span(inst: Instance, budget: int = DEFAULT_BUDGET) -> int:
    for s in range(1, span_upper_bound(inst) + 1):
        if brute_decide(inst, s, budget):
            return s
    raise AssertionError("no proper assignment within the span upper bound")


def brute_tuples_count(inst: Instance, X: int, s: int, *, ell: int | None = None,
                       budget: int = DEFAULT_BUDGET) -> int:
    """Count tuples ``(I_1, ..., I_s)`` of subsets of ``X`` that are proper and
    pairwise disjoint within every ``ell`` consecutive positions."""
    ell = inst.ell if ell is None else ell
    subsets = list(enumerate_subsets(X))
    _check_budget(len(subsets) ** s, budget)
    w = inst.weights
    count = 0
    for tup in itertools.product(subsets, repeat=s):
        if _in_universe(w, tup, ell):
            count += 1
    return count


def _in_universe(w, tup, ell) -> bool:
    for i, a in enumerate(tup):
        for j in range(i, len(tup)):
            b = tup[j]
            if 0 < j - i < ell and a & b:
                return False
            for x in members(a):
                for y in members(b):
                    if j - i < w[x, y]:
                        return False
    return True
