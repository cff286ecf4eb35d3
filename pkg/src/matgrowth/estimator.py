"""scikit-learn style wrappers.

``fit`` takes one matrix set (anything :func:`check_matrix_set` accepts) and
stores the result in trailing-underscore attributes. ``predict`` maps a list
of matrix sets to growth-class labels.
"""
from __future__ import annotations

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .classifier import classify
from .matrix import check_matrix_set
from .oracle import DEFAULT_BUDGET, DEFAULT_CAP, classify_bruteforce
from .trackability import LabelledGraph, decide_trackable


class GrowthClassifier(BaseEstimator):
    """Exact growth classification of a single matrix set."""

    def fit(self, X, y=None):
        S = check_matrix_set(X)
        v = classify(S)
        self.verdict_ = v
        self.growth_class_ = v.growth_class.value
        self.degree_ = v.degree
        self.t0_ = v.t0
        self.witness_ = v.witness
        self.scc_count_ = v.scc_count
        self.n_features_in_ = S.n
        return self

    def predict(self, X):
        check_is_fitted(self)
        return [classify(check_matrix_set(s)).growth_class.value for s in X]


class BruteForceOracle(BaseEstimator):
    """Reference classification by enumerating products up to ``tmax``."""

    def __init__(self, tmax: int = 10, cap: int = DEFAULT_CAP, budget: int = DEFAULT_BUDGET, workers: int = 1):
        self.tmax = tmax
        self.cap = cap
        self.budget = budget
        self.workers = workers

    def _run(self, S):
        return classify_bruteforce(S, self.tmax, self.cap, self.budget, self.workers)

    def fit(self, X, y=None):
        S = check_matrix_set(X)
        o = self._run(S)
        self.verdict_ = o
        self.growth_class_ = o.growth_class.value if o.growth_class else None
        self.max_t_ = o.max_t
        self.degree_candidates_ = o.degree_candidates
        self.n_features_in_ = S.n
        return self

    def predict(self, X):
        check_is_fitted(self)
        out = []
        for s in X:
            c = self._run(check_matrix_set(s)).growth_class
            out.append(c.value if c else None)
        return out


class TrackabilityAnalyzer(BaseEstimator):
    """Fit on a :class:`LabelledGraph` or a ``(labels, edges)`` pair."""

    def __init__(self, convention: str = "destination"):
        self.convention = convention

    @staticmethod
    def _graph(X) -> LabelledGraph:
        if isinstance(X, LabelledGraph):
            return X
        labels, edges = X
        return LabelledGraph.build(labels, edges)

    def fit(self, X, y=None):
        tv = decide_trackable(self._graph(X), self.convention)
        self.verdict_ = tv
        self.trackable_ = tv.trackable
        self.growth_class_ = tv.verdict.growth_class.value
        self.degree_ = tv.degree
        return self

    def predict(self, X):
        check_is_fitted(self)
        return [decide_trackable(self._graph(g), self.convention).trackable for g in X]
