"""Channel assignment instances, assignments, file formats and the L(p,q) reduction.

Vertices are the integers ``0..n-1`` and channels are ``1..s``.  A weight of
zero places no constraint on a pair.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "MAX_VERTICES",
    "ParseError",
    "Instance",
    "Assignment",
    "PartialAssignment",
    "SimpleGraph",
    "parse_instance",
    "parse_graph",
    "serialize_instance",
    "serialize_graph",
    "format_assignment",
    "parse_assignment",
    "is_proper_assignment",
    "span_upper_bound",
    "lpq_reduce",
    "random_instance",
]

# Bit-vector width for vertex sets.  The solvers are exponential in n, so the
# practical limit is far lower (about 20).
MAX_VERTICES = 64

MAGIC = ("ca", "1")


class ParseError(ValueError):
    """Malformed instance, graph or assignment text."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Instance:
    """Symmetric nonnegative integer weight function on ``n`` vertices.

    ``ell`` is the largest off-diagonal weight and is always derived from the
    weights.  Instances are immutable; the weight matrix is a read-only array.
    """

    __slots__ = ("_w", "_ell")

    def __init__(self, weights):
        w = np.array(weights, copy=True)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError(f"weights must be a square matrix, got shape {w.shape}")
        n = w.shape[0]
        if n < 1:
            raise ValueError("an instance needs at least one vertex")
        if n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices are supported, got {n}")
        if w.dtype.kind == "f":
            if not np.all(np.isfinite(w)) or not np.all(w == np.round(w)):
                raise ValueError("weights must be integers")
        elif w.dtype.kind not in "iub":
            raise ValueError(f"weights must be int64-representable integers, got dtype {w.dtype}")
        w = w.astype(np.int64)
        if np.any(w < 0):
            raise ValueError("weights must be nonnegative")
        if np.any(np.diag(w) != 0):
            raise ValueError("diagonal weights must be zero")
        if not np.array_equal(w, w.T):
            raise ValueError("weight matrix must be symmetric")
        w.setflags(write=False)
        self._w = w
        self._ell = int(w.max()) if n > 1 else 0

    @classmethod
    def from_pairs(cls, n: int, pairs: Mapping[tuple[int, int], int]) -> "Instance":
        w = np.zeros((n, n), dtype=np.int64)
        for (u, v), x in pairs.items():
            w[u, v] = w[v, u] = x
        return cls(w)

    @property
    def n(self) -> int:
        return self._w.shape[0]

    @property
    def ell(self) -> int:
        return self._ell

    @property
    def weights(self) -> np.ndarray:
        return self._w

    def w(self, u: int, v: int) -> int:
        return int(self._w[u, v])

    def pairs(self) -> list[tuple[int, int, int]]:
        """Nonzero weights as ``(u, v, weight)`` with ``u < v`` in lexicographic order."""
        us, vs = np.nonzero(np.triu(self._w, 1))
        return [(int(u), int(v), int(self._w[u, v])) for u, v in zip(us, vs)]

    def restrict(self, vertices: Iterable[int]) -> "Instance":
        idx = list(vertices)
        return Instance(self._w[np.ix_(idx, idx)])

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return np.array_equal(self._w, other._w)

    def __hash__(self):
        return hash((self.n, self._w.tobytes()))

    def __repr__(self):
        return f"Instance(n={self.n}, ell={self.ell}, pairs={self.pairs()})"


@dataclass(frozen=True)
class Assignment:
    """A total map from vertices to channels ``1..span``."""

    channels: tuple[int, ...]
    span: int

    def __post_init__(self):
        object.__setattr__(self, "channels", tuple(int(c) for c in self.channels))
        if self.span < 1:
            raise ValueError("span must be at least 1")
        for v, c in enumerate(self.channels):
            if not 1 <= c <= self.span:
                raise ValueError(f"vertex {v}: channel {c} outside 1..{self.span}")

    def __len__(self):
        return len(self.channels)

    def __getitem__(self, v: int) -> int:
        return self.channels[v]


@dataclass(frozen=True)
class PartialAssignment:
    """Channels fixed on a subset ``Z`` of the vertices."""

    fixed: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        fixed = {int(v): int(c) for v, c in dict(self.fixed).items()}
        for v, c in fixed.items():
            if v < 0:
                raise ValueError(f"negative vertex index {v}")
            if c < 1:
                raise ValueError(f"vertex {v}: channel {c} is below 1")
        object.__setattr__(self, "fixed", dict(sorted(fixed.items())))

    @property
    def domain(self) -> int:
        """Bitmask of the fixed vertices."""
        mask = 0
        for v in self.fixed:
            mask |= 1 << v
        return mask

    def extend(self, v: int, c: int) -> "PartialAssignment":
        return PartialAssignment({**self.fixed, v: c})

    def __len__(self):
        return len(self.fixed)

    def __hash__(self):
        return hash(tuple(self.fixed.items()))


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph without loops; edges are stored as ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        norm = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def neighbors(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    @classmethod
    def from_adjacency(cls, adjacency) -> "SimpleGraph":
        a = np.asarray(adjacency)
        us, vs = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], frozenset(zip(us.tolist(), vs.tolist())))


# --------------------------------------------------------------------------
# text formats


def _records(text: str):
    """Yield ``(lineno, tokens)`` for non-empty lines with comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", lineno) from None


def _parse(text: str, kind: str):
    n = None
    entries: dict[tuple[int, int], int] = {}
    seen_kind = None
    for pos, (lineno, tok) in enumerate(_records(text)):
        head = tok[0]
        if head == "ca":
            if pos != 0:
                raise ParseError("header 'ca 1' must be the first line", lineno)
            if tuple(tok) != MAGIC:
                raise ParseError(f"unsupported header {' '.join(tok)!r}, expected 'ca 1'", lineno)
            continue
        if head == "n":
            if len(tok) != 2:
                raise ParseError("expected 'n <int>'", lineno)
            if n is not None:
                raise ParseError("duplicate 'n' line", lineno)
            n = _int(tok[1], lineno, "vertex count")
            if not 1 <= n <= MAX_VERTICES:
                raise ParseError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}", lineno)
            continue
        if head not in ("w", "g"):
            raise ParseError(f"unknown record type {head!r}", lineno)
        if n is None:
            raise ParseError(f"'{head}' line before 'n' line", lineno)
        if seen_kind is not None and head != seen_kind:
            raise ParseError("'w' and 'g' lines cannot be mixed", lineno)
        seen_kind = head
        expect = "w" if kind == "instance" else "g"
        if head != expect:
            raise ParseError(f"'{head}' lines are not allowed in a {kind} file", lineno)
        if head == "w":
            if len(tok) != 4:
                raise ParseError("expected 'w <u> <v> <weight>'", lineno)
            u, v = _int(tok[1], lineno, "vertex"), _int(tok[2], lineno, "vertex")
            x = _int(tok[3], lineno, "weight")
            if x < 0:
                raise ParseError(f"negative weight {x}", lineno)
        else:
            if len(tok) != 3:
                raise ParseError("expected 'g <u> <v>'", lineno)
            u, v = _int(tok[1], lineno, "vertex"), _int(tok[2], lineno, "vertex")
            x = 1
        for a in (u, v):
            if not 0 <= a < n:
                raise ParseError(f"vertex {a} out of range 0..{n - 1}", lineno)
        if u == v:
            if head == "g":
                raise ParseError(f"self-loop at vertex {u}", lineno)
            if x != 0:
                raise ParseError(f"nonzero self weight at vertex {u}", lineno)
            continue
        key = (min(u, v), max(u, v))
        if key in entries and entries[key] != x:
            raise ParseError(
                f"conflicting weights {entries[key]} and {x} for pair {key}", lineno)
        entries[key] = x
    if n is None:
        raise ParseError("missing 'n' line")
    return n, entries


def parse_instance(text: str) -> Instance:
    """Parse the ``ca 1`` instance format.

    >>> parse_instance("ca 1\\nn 2\\nw 0 1 2").w(1, 0)
    2
    """
    n, entries = _parse(text, "instance")
    return Instance.from_pairs(n, entries)


def parse_graph(text: str) -> SimpleGraph:
    n, entries = _parse(text, "graph")
    return SimpleGraph(n, frozenset(entries))


def serialize_instance(inst: Instance) -> str:
    lines = ["ca 1", f"n {inst.n}"]
    lines += [f"w {u} {v} {x}" for u, v, x in inst.pairs()]
    return "\n".join(lines) + "\n"


def serialize_graph(g: SimpleGraph) -> str:
    lines = ["ca 1", f"n {g.n}"]
    lines += [f"g {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def format_assignment(a: Assignment | None) -> str:
    if a is None:
        return "infeasible\n"
    return "".join(f"v {v} {c}\n" for v, c in enumerate(a.channels))


def parse_assignment(text: str, span: int) -> Assignment | None:
    """Inverse of :func:`format_assignment`; returns ``None`` for ``infeasible``."""
    channels: dict[int, int] = {}
    for lineno, tok in _records(text):
        if tok == ["infeasible"]:
            return None
        if len(tok) != 3 or tok[0] != "v":
            raise ParseError("expected 'v <vertex> <channel>'", lineno)
        v, c = _int(tok[1], lineno, "vertex"), _int(tok[2], lineno, "channel")
        if v in channels:
            raise ParseError(f"vertex {v} assigned twice", lineno)
        channels[v] = c
    if sorted(channels) != list(range(len(channels))):
        raise ParseError("assignment must cover vertices 0..n-1")
    return Assignment(tuple(channels[v] for v in range(len(channels))), span)


# --------------------------------------------------------------------------
# basic predicates


def is_proper_assignment(inst: Instance, a: Assignment) -> bool:
    c = np.asarray(a.channels, dtype=np.int64)
    if c.shape != (inst.n,):
        raise ValueError(f"assignment covers {c.size} vertices, instance has {inst.n}")
    gaps = np.abs(c[:, None] - c[None, :])
    return bool(np.all(gaps >= inst.weights))


def span_upper_bound(inst: Instance) -> int:
    """Span that always admits a proper assignment: vertex ``v`` on ``v*ell + 1``."""
    if inst.ell == 0:
        return 1
    return (inst.n - 1) * inst.ell + 1


def lpq_reduce(g: SimpleGraph, p: int, q: int) -> Instance:
    """Channel assignment instance of L(p,q)-labelling ``g``.

    Adjacent pairs get weight ``p`` and pairs at distance exactly two get
    ``q``; adjacency takes precedence, since such pairs are at distance one.
    """
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    adj = g.neighbors()
    w = np.zeros((g.n, g.n), dtype=np.int64)
    for u in range(g.n):
        for mid in adj[u]:
            for v in adj[mid]:
                if v != u:
                    w[u, v] = q
    for u, v in g.edges:
        w[u, v] = w[v, u] = p
    return Instance(w)


def random_instance(n: int, max_weight: int, seed=None, density: float = 1.0) -> Instance:
    """Weights drawn uniformly from ``0..max_weight``; ``density`` thins nonzero pairs."""
    rng = random.Random(seed)
    w = np.zeros((n, n), dtype=np.int64)
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < density:
            w[u, v] = w[v, u] = rng.randint(0, max_weight)
    return Instance(w)
