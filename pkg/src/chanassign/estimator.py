"""scikit-learn style wrappers.

:class:`LpqTransformer` maps adjacency matrices to L(p,q) weight matrices and
:class:`ChannelAssigner` labels each vertex of a weight matrix with a channel,
so the two compose in a :class:`~sklearn.pipeline.Pipeline`.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .counting import count_assignments
from .decision import min_span
from .finding import find_assignment
from .instance import Instance, SimpleGraph, lpq_reduce
from .validation import check_adjacency, check_span, check_weight_matrix


class ChannelAssigner(ClusterMixin, BaseEstimator):
    """Exact channel assignment of a symmetric weight matrix.

    Parameters
    ----------
    span : int or None
        Channels available.  ``None`` uses the minimum feasible span.
    count : bool
        Also compute the number of proper assignments of that span.
    n_jobs : int
        Workers for the inclusion-exclusion sums.

    Attributes
    ----------
    span_ : int
    labels_ : ndarray of shape (n,) or None
        Lexicographically smallest proper assignment, ``None`` if infeasible.
    feasible_ : bool
    n_assignments_ : int
        Only when ``count=True``.
    instance_ : Instance
    """

    def __init__(self, span=None, count=False, n_jobs=1):
        self.span = span
        self.count = count
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        span = check_span(self.span, allow_none=True)
        inst = Instance(check_weight_matrix(X))
        self.instance_ = inst
        self.span_ = min_span(inst, n_jobs=self.n_jobs) if span is None else span
        a = find_assignment(inst, self.span_, n_jobs=self.n_jobs)
        self.feasible_ = a is not None
        self.labels_ = None if a is None else np.asarray(a.channels, dtype=np.int64)
        if self.count:
            self.n_assignments_ = count_assignments(inst, self.span_, n_jobs=self.n_jobs)
        return self

    def predict(self, X=None):
        """Channel labels of the fitted instance; ``X`` must be that instance if given."""
        check_is_fitted(self, "span_")
        if X is not None and not np.array_equal(check_weight_matrix(X), self.instance_.weights):
            raise ValueError("predict only labels the fitted weight matrix")
        return self.labels_


class LpqTransformer(TransformerMixin, BaseEstimator):
    """Adjacency matrix to L(p,q) weight matrix (``p`` on edges, ``q`` at distance two)."""

    def __init__(self, p=2, q=1):
        self.p = p
        self.q = q

    def fit(self, X, y=None):
        A = check_adjacency(X)
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be nonnegative")
        self.n_features_in_ = A.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        A = check_adjacency(X)
        inst = lpq_reduce(SimpleGraph.from_adjacency(A), self.p, self.q)
        return np.array(inst.weights)
