"""Estimator-style front ends.

``GroupRealizer().fit(group)`` runs the whole construction and exposes the
result as fitted attributes; ``IsometrySolver().fit(space)`` computes an
isometry group.  Both follow the scikit-learn conventions for parameters
(``get_params``/``set_params``, nothing done in ``__init__``) and fitted state
(trailing underscores, ``check_is_fitted``).
"""
from __future__ import annotations

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .iso_search import enumerate_isometries, naive_enumerate
from .realize import extend_isometry, left_translation, realize
from .metric import subspace
from .validation import check_group, check_params, check_space


class GroupRealizer(BaseEstimator):
    """Realize a finite group as the full isometry group of a finite metric space.

    Parameters
    ----------
    metric : "discrete", "word:<generator indices>" or FiniteMetricSpace
        Left-invariant metric put on the group before the construction.
    pipeline : {"compact", "polish"}
        ``compact`` stacks each orbit on its own distance level under an apex;
        ``polish`` keeps one level and adds a tag point per orbit.
    cover : {"greedy", "pairs"}
    offsets : {"harmonic", "dyadic"}
        Level offsets ``1/(i+1)`` or ``1/2**i`` for the compact pipeline.
    include_y_layer : bool
    node_budget : int or None
        Node limit for every isometry search (default ``10**8``).

    Attributes
    ----------
    group_ : FiniteGroup
    base_space_ : FiniteMetricSpace
    space_ : FiniteMetricSpace
    provenance_ : list of PointRecord
    cover_ : list of Neighborhood
    report_ : RealizationReport
    embedding_ : list of Isometry
        ``embedding_[g]`` is the isometry of ``space_`` extending ``x -> g*x``.
    """

    def __init__(self, metric="discrete", pipeline="compact", cover="greedy", offsets="harmonic",
                 include_y_layer=False, node_budget=None):
        self.metric = metric
        self.pipeline = pipeline
        self.cover = cover
        self.offsets = offsets
        self.include_y_layer = include_y_layer
        self.node_budget = node_budget

    def fit(self, G, y=None):
        check_params(self.metric, self.pipeline, self.cover, self.offsets)
        group = check_group(G)
        result = realize(
            group,
            metric=self.metric,
            pipeline=self.pipeline,
            cover_strategy=self.cover,
            offsets=self.offsets,
            include_y_layer=self.include_y_layer,
            node_budget=self.node_budget,
        )
        self.group_ = group
        self.base_space_ = result.base_space
        self.space_ = result.space
        self.provenance_ = result.provenance
        self.cover_ = result.cover
        self.report_ = result.report
        X = subspace(result.space, result.assembly.x_points)
        self.embedding_ = [
            extend_isometry(left_translation(group, g, X), result.space, result.provenance)
            for g in range(group.order)
        ]
        return self

    def transform(self, G=None):
        """The realized space.  ``G``, if given, must be the fitted group."""
        check_is_fitted(self, "space_")
        if G is not None and check_group(G).table != self.group_.table:
            raise ValueError("transform() got a different group than fit()")
        return self.space_

    def fit_transform(self, G, y=None):
        return self.fit(G).space_

    def score(self, G=None, y=None) -> float:
        """1.0 if the fitted space was verified to realize the group, else 0.0."""
        check_is_fitted(self, "report_")
        return 1.0 if self.report_.realized else 0.0


class IsometrySolver(BaseEstimator):
    """Compute the isometry group of a finite metric space.

    ``naive=True`` switches to the brute-force oracle (at most 8 points).
    """

    def __init__(self, naive=False, node_budget=None, n_jobs=1):
        self.naive = naive
        self.node_budget = node_budget
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        space = check_space(X)
        if self.naive:
            self.group_ = naive_enumerate(space)
        else:
            self.group_ = enumerate_isometries(space, self.node_budget, self.n_jobs)
        self.space_ = space
        self.order_ = len(self.group_)
        return self

    def transform(self, X=None):
        check_is_fitted(self, "group_")
        return [list(p) for p in self.group_.perms]

    def fit_transform(self, X, y=None):
        return self.fit(X).transform()
