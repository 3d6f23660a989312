"""Scikit-learn style estimator interface to the network builders.

Each builder is a parametrized estimator whose fit(X) consumes a demand
(or, for spanner builders, a support graph) and exposes the constructed
artifacts as trailing-underscore attributes.  Parameters follow the
sklearn contract (get_params / set_params / clone), so builders drop into
model-selection tooling unchanged.

    >>> builder = SparseDanBuilder().fit(demand)
    >>> builder.network_.m, builder.report_.epl
"""

from __future__ import annotations

from sklearn.base import BaseEstimator

from .construct import (
    build_dary_dan,
    build_sparse_dan,
    build_tree_dan,
    spanner_to_dan,
)
from .demand import Demand, demand_from_dict, normalize
from .netgraph import HostNetwork, demand_support
from .spanners import build_ldd_spanner, greedy_spanner, hypercube_spanner


def check_demand(X) -> Demand:
    """Validate and coerce estimator input into a Demand.

    Accepts a Demand, a demand-JSON-like dict, or an iterable of
    (src, dst, weight) triples (normalized if needed).
    """
    if isinstance(X, Demand):
        return X
    if isinstance(X, dict):
        return demand_from_dict(X)
    try:
        return normalize(list(X))
    except TypeError:
        raise TypeError(
            f"cannot interpret {type(X).__name__} as a demand"
        ) from None


def check_graph(X) -> HostNetwork:
    """Coerce estimator input into an undirected support graph."""
    if isinstance(X, HostNetwork):
        return X
    return demand_support(check_demand(X))


class _DanBuilderMixin:
    """Shared post-fit attribute wiring for network builders."""

    def _finish(self, report):
        self.report_ = report
        self.network_ = report.network
        self.max_degree_ = report.max_degree
        self.epl_ = report.epl
        return self


class TreeDanBuilder(_DanBuilderMixin, BaseEstimator):
    """Max-degree-8 builder for demands whose support is a spanning tree.

    Parameters
    ----------
    root : 'centroid' or int
        Root of the support tree; the weighted centroid by default.
    """

    def __init__(self, root="centroid"):
        self.root = root

    def fit(self, X, y=None):
        return self._finish(build_tree_dan(check_demand(X), root=self.root))


class SparseDanBuilder(_DanBuilderMixin, BaseEstimator):
    """Helper-subdivision builder, max degree 12 * ceil(avg degree)."""

    def fit(self, X, y=None):
        return self._finish(build_sparse_dan(check_demand(X)))


class DaryDanBuilder(_DanBuilderMixin, BaseEstimator):
    """Complete arity-ary tree host over all nodes."""

    def __init__(self, arity=2):
        self.arity = arity

    def fit(self, X, y=None):
        return self._finish(build_dary_dan(check_demand(X), self.arity))


class SpannerDanBuilder(_DanBuilderMixin, BaseEstimator):
    """Spanner-to-network pipeline for regular, uniform demands.

    Parameters
    ----------
    spanner : 'ldd', 'ldd-metric', 'greedy', or a HostNetwork
        Which spanner of the demand's support to reduce; an explicit
        HostNetwork is used as-is (the externally-supplied case).
    t : int
        Stretch target for the greedy spanner.
    """

    def __init__(self, spanner="ldd", t=3):
        self.spanner = spanner
        self.t = t

    def fit(self, X, y=None):
        demand = check_demand(X)
        if isinstance(self.spanner, HostNetwork):
            spanner = self.spanner
        else:
            support = demand_support(demand)
            if self.spanner == "ldd":
                spanner = build_ldd_spanner(support, "subgraph").spanner
            elif self.spanner == "ldd-metric":
                spanner = build_ldd_spanner(support, "metric").spanner
            elif self.spanner == "greedy":
                spanner = greedy_spanner(support, self.t).spanner
            else:
                raise ValueError(f"unknown spanner {self.spanner!r}")
        self.spanner_ = spanner
        return self._finish(spanner_to_dan(demand, spanner))


class _SpannerBuilderMixin:
    def _finish(self, result):
        self.result_ = result
        self.spanner_ = result.spanner
        self.distortion_ = result.distortion
        return self


class LddSpannerBuilder(_SpannerBuilderMixin, BaseEstimator):
    """Cluster spanner of a support graph (stretch <= 9, metric <= 5)."""

    def __init__(self, variant="subgraph", with_apd=False):
        self.variant = variant
        self.with_apd = with_apd

    def fit(self, X, y=None):
        return self._finish(
            build_ldd_spanner(check_graph(X), self.variant, with_apd=self.with_apd)
        )


class GreedySpannerBuilder(_SpannerBuilderMixin, BaseEstimator):
    """Greedy t-spanner of a support graph."""

    def __init__(self, t=3, with_apd=False):
        self.t = t
        self.with_apd = with_apd

    def fit(self, X, y=None):
        return self._finish(
            greedy_spanner(check_graph(X), self.t, with_apd=self.with_apd)
        )


class HypercubeSpannerBuilder(_SpannerBuilderMixin, BaseEstimator):
    """Landmark 3-spanner of the d-cube; X is ignored at fit time."""

    def __init__(self, d=4, with_apd=False):
        self.d = d
        self.with_apd = with_apd

    def fit(self, X=None, y=None):
        return self._finish(hypercube_spanner(self.d, with_apd=self.with_apd))
