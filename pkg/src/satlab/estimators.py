"""scikit-learn style wrappers around the saturation predicate and the search.

``SaturationClassifier`` labels graphs as saturated or not and exposes the
verdict counts as features; ``SaturationSearch`` runs the minimum search on
``fit``.  Inputs are sequences of ``Graph`` objects or graph6 strings.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import Graph
from .graph6 import decode
from .saturation import ALL, CONNECTED, check_saturation, is_saturated, saturation_search
from .virus import VirusPattern


def check_graphs(X) -> list[Graph]:
    """Coerce ``X`` into a list of graphs; graph6 strings are decoded."""
    if isinstance(X, (Graph, str, bytes)):
        raise TypeError("expected a sequence of graphs, got a single graph")
    out = []
    for i, item in enumerate(X):
        if isinstance(item, Graph):
            out.append(item)
        elif isinstance(item, (str, bytes)):
            out.append(decode(item))
        else:
            raise TypeError(f"item {i}: expected Graph or graph6 string, got {type(item).__name__}")
    return out


class SaturationClassifier(ClassifierMixin, TransformerMixin, BaseEstimator):
    """Predicts whether each graph is K^s_t-saturated (no learning involved)."""

    FEATURES = ("is_free", "completing_nonedges", "total_nonedges", "is_saturated")

    def __init__(self, s: int = 2, t: int = 4, require_connected: bool = False):
        self.s = s
        self.t = t
        self.require_connected = require_connected

    def fit(self, X=None, y=None):
        self.pattern_ = VirusPattern(self.s, self.t)
        self.classes_ = np.array([False, True])
        if X is not None:
            check_graphs(X)
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "pattern_")
        graphs = check_graphs(X)
        return np.array([is_saturated(g, self.pattern_, self.require_connected) for g in graphs], dtype=bool)

    def transform(self, X) -> np.ndarray:
        """Rows of (is_free, completing non-edges, total non-edges, is_saturated)."""
        check_is_fitted(self, "pattern_")
        rows = []
        for g in check_graphs(X):
            v = check_saturation(g, self.pattern_, self.require_connected)
            rows.append((int(v.is_free), v.completing_nonedges, v.total_nonedges, int(v.is_saturated)))
        return np.array(rows, dtype=np.int64).reshape(-1, len(self.FEATURES))


class SaturationSearch(BaseEstimator):
    """Exhaustive sat/csat search; ``fit`` fills ``report_`` and ``sat_value_``."""

    def __init__(self, n: int = 6, s: int = 2, t: int = 4, mode: str = ALL, jobs: int = 1):
        self.n = n
        self.s = s
        self.t = t
        self.mode = mode
        self.jobs = jobs

    def fit(self, X: Iterable | None = None, y=None):
        if self.mode not in (ALL, CONNECTED):
            raise ValueError(f"mode must be {ALL!r} or {CONNECTED!r}, got {self.mode!r}")
        graphs = None if X is None else check_graphs(X)
        self.report_ = saturation_search(
            self.n, VirusPattern(self.s, self.t), mode=self.mode, jobs=self.jobs, graphs=graphs
        )
        self.sat_value_ = self.report_.sat_value
        self.extremal_graphs_ = self.report_.extremal_graphs()
        return self
