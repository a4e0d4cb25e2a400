"""Vertex sets as bitmasks, subset ranking, and the fast zeta/Moebius transforms.

A vertex set is a plain ``int`` whose bit ``v`` marks vertex ``v``.  Tables over
the subsets of a ground set are dense arrays indexed by :func:`subset_rank`, so
the ground set need not occupy the low bits.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "popcount",
    "members",
    "to_mask",
    "subset_rank",
    "subset_unrank",
    "enumerate_subsets",
    "SubsetTable",
    "digit_sweep",
    "fast_zeta",
    "fast_moebius",
]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def members(mask: int) -> list[int]:
    """Set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def subset_rank(sub: int, ground: int) -> int:
    """Compress ``sub`` to the bit positions of ``ground``.

    >>> subset_rank(0b000100, 0b100101)
    2
    """
    if sub & ~ground:
        raise ValueError(f"{sub:#b} is not a subset of {ground:#b}")
    rank = 0
    for pos, v in enumerate(members(ground)):
        if sub >> v & 1:
            rank |= 1 << pos
    return rank


def subset_unrank(rank: int, ground: int) -> int:
    vs = members(ground)
    if not 0 <= rank < 1 << len(vs):
        raise ValueError(f"rank {rank} out of range for a ground set of size {len(vs)}")
    sub = 0
    for pos, v in enumerate(vs):
        if rank >> pos & 1:
            sub |= 1 << v
    return sub


def enumerate_subsets(ground: int) -> Iterator[int]:
    """All subsets of ``ground`` in increasing rank order, starting from the empty set."""
    sub = 0
    while True:
        yield sub
        if sub == ground:
            return
        # next subset in numeric order, which coincides with rank order
        sub = (sub - ground) & ground


@dataclass
class SubsetTable:
    """Integer values on all subsets of ``ground``, indexed by subset rank."""

    ground: int
    values: np.ndarray

    def __post_init__(self):
        self.values = np.array(self.values, dtype=object).reshape(-1)
        size = 1 << popcount(self.ground)
        if self.values.shape != (size,):
            raise ValueError(f"expected {size} values for the ground set, got {self.values.size}")

    @classmethod
    def from_function(cls, ground: int, f) -> "SubsetTable":
        return cls(ground, [f(sub) for sub in enumerate_subsets(ground)])

    def __getitem__(self, sub: int):
        return self.values[subset_rank(sub, self.ground)]

    def __eq__(self, other):
        if not isinstance(other, SubsetTable):
            return NotImplemented
        return self.ground == other.ground and list(self.values) == list(other.values)


def digit_sweep(values: np.ndarray, base: int, ndigits: int,
                src: int = 0, dst: int = 1, sign: int = 1) -> int:
    """In-place coordinatewise sweep over base-``base`` indices on the last axis.

    For every digit position (lowest first) the entries whose digit equals
    ``dst`` receive ``sign`` times the entry that differs only by having digit
    ``src`` there.  With ``base=2`` this is Yates' algorithm for the zeta
    transform (``sign=1``) or its inverse (``sign=-1``).  For larger bases it
    transforms, for every fixed assignment of the other digit values, the
    subset lattice spanned by digits ``src``/``dst``.  Leading axes are
    independent rows.

    Returns the number of additions performed per row.
    """
    lead = values.shape[:-1]
    if values.shape[-1:] != (base ** ndigits,):
        raise ValueError("last axis must have length base**ndigits")
    if not values.flags.c_contiguous:
        raise ValueError("values must be C-contiguous to be updated in place")
    adds = 0
    for p in range(ndigits):
        view = values.reshape(lead + (base ** (ndigits - 1 - p), base, base ** p))
        if sign == 1:
            view[..., dst, :] += view[..., src, :]
        else:
            view[..., dst, :] -= view[..., src, :]
        adds += base ** (ndigits - 1)
    return adds


def fast_zeta(t: SubsetTable) -> SubsetTable:
    """``g(Q) = sum of t(R) over R subset of Q`` for every ``Q``."""
    out = t.values.copy()
    digit_sweep(out, 2, popcount(t.ground))
    return SubsetTable(t.ground, out)


def fast_moebius(t: SubsetTable) -> SubsetTable:
    """Inverse of :func:`fast_zeta`: ``h(Q) = sum of (-1)^|Q-R| t(R)``."""
    out = t.values.copy()
    digit_sweep(out, 2, popcount(t.ground), sign=-1)
    return SubsetTable(t.ground, out)
