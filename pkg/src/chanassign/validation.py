"""Input checks for array-like weight and adjacency matrices."""
from __future__ import annotations

import numbers

import numpy as np
from sklearn.utils import check_array


def _square(a: np.ndarray, name: str) -> np.ndarray:
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    return a


def _integral(a: np.ndarray, name: str) -> np.ndarray:
    if a.dtype.kind == "f" and not np.all(a == np.round(a)):
        raise ValueError(f"{name} must contain integers")
    return a.astype(np.int64)


def check_weight_matrix(W) -> np.ndarray:
    """Validate a channel-separation matrix and return it as ``int64``."""
    W = check_array(W, dtype="numeric", ensure_min_samples=1, ensure_min_features=1)
    W = _integral(_square(W, "weight matrix"), "weight matrix")
    if np.any(W < 0):
        raise ValueError("weight matrix must be nonnegative")
    if np.any(np.diag(W) != 0):
        raise ValueError("weight matrix must have a zero diagonal")
    if not np.array_equal(W, W.T):
        raise ValueError("weight matrix must be symmetric")
    return W


def check_adjacency(A) -> np.ndarray:
    """Validate a graph adjacency matrix; any nonzero entry is an edge."""
    A = check_array(A, dtype="numeric", ensure_min_samples=1, ensure_min_features=1)
    A = _square(A, "adjacency matrix") != 0
    if np.any(np.diag(A)):
        raise ValueError("adjacency matrix must not contain self-loops")
    if not np.array_equal(A, A.T):
        raise ValueError("adjacency matrix must be symmetric")
    return A


def check_span(s, allow_none: bool = False):
    if s is None and allow_none:
        return None
    if isinstance(s, bool) or not isinstance(s, numbers.Integral) or s < 1:
        raise ValueError(f"span must be a positive integer, got {s!r}")
    return int(s)
