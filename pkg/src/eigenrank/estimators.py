"""Estimator-style wrappers around the numeric cores.

Each wrapper follows the scikit-learn contract: hyperparameters in
__init__, data in fit, learned state in trailing-underscore attributes,
so they compose with clone(), get_params()/set_params(), and pipelines
that only need fit().  The structure being judged (hierarchy, network)
is a hyperparameter; the judgments themselves are the data.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError
from sklearn.utils.validation import check_is_fitted

import numpy as np

from .compose import compose
from .matrix import as_comparison_matrix
from .priority import DISTRIBUTIVE, consistency_report, derive_priorities
from .structure import Hierarchy, Network
from .supermatrix import Supermatrix, assemble_supermatrix, limit_supermatrix


class PriorityEstimator(BaseEstimator):
    """Derive a ratio-scale priority vector from one reciprocal matrix.

    Parameters
    ----------
    mode : "distributive" sums weights to 1; "ideal" rescales so the
        largest weight is 1.
    ri : random-index override for the consistency ratio; None uses the
        seeded default table.

    Attributes (after fit)
    ----------------------
    labels_, weights_, lambda_max_, n_iter_ : the solved eigensystem.
    ci_, ri_, cr_, consistent_, worst_entry_ : the consistency report.
    """

    def __init__(self, mode: str = DISTRIBUTIVE, ri: float | None = None):
        self.mode = mode
        self.ri = ri

    def fit(self, X, y=None):
        m = as_comparison_matrix(X)
        pv = derive_priorities(m, mode=self.mode)
        report = consistency_report(m, derive_priorities(m), ri=self.ri)
        self.labels_ = pv.labels
        self.weights_ = pv.weights
        self.lambda_max_ = pv.lambda_max
        self.n_iter_ = pv.n_iter
        self.ci_ = report.ci
        self.ri_ = report.ri
        self.cr_ = report.cr
        self.consistent_ = report.consistent
        self.worst_entry_ = report.worst_entry
        return self

    def ranking(self) -> list[str]:
        check_is_fitted(self, "weights_")
        order = sorted(range(len(self.labels_)), key=lambda i: -self.weights_[i])
        return [self.labels_[i] for i in order]

    def score(self, X=None, y=None) -> float:
        """Negated consistency ratio, so higher is better."""
        check_is_fitted(self, "cr_")
        return -self.cr_


class HierarchyComposer(BaseEstimator):
    """Compose per-context matrices down a hierarchy into global weights.

    The hierarchy is the hyperparameter; fit takes a mapping from parent
    node id to that parent's comparison matrix (arrays welcome, labels
    attached from the structure).
    """

    def __init__(self, hierarchy: Hierarchy | None = None, mode: str = DISTRIBUTIVE):
        self.hierarchy = hierarchy
        self.mode = mode

    def fit(self, X, y=None):
        if self.hierarchy is None:
            raise NotFittedError("set the hierarchy parameter before fitting")
        matrices = {
            parent: as_comparison_matrix(
                m, labels=self.hierarchy.children_of(parent)
            )
            for parent, m in X.items()
        }
        gp = compose(self.hierarchy, matrices, mode=self.mode)
        self.per_level_ = gp.per_level
        self.final_ = gp.final
        self.labels_ = gp.final.labels
        self.weights_ = gp.final.weights
        return self

    def ranking(self) -> list[str]:
        check_is_fitted(self, "final_")
        return list(self.final_.ranking())


class SupermatrixLimiter(BaseEstimator):
    """Take the limit of a column-stochastic supermatrix.

    fit accepts either a ready Supermatrix / stochastic array, or, when
    the network parameter is set, a mapping from (target element, source
    component) to comparison matrices to assemble first.
    """

    def __init__(
        self,
        network: Network | None = None,
        cluster_weights: dict | None = None,
        eps: float = 1e-10,
        max_pow: int = 10000,
        cesaro_window: int = 64,
    ):
        self.network = network
        self.cluster_weights = cluster_weights
        self.eps = eps
        self.max_pow = max_pow
        self.cesaro_window = cesaro_window

    def fit(self, X, y=None):
        if self.network is not None and isinstance(X, dict):
            sm = assemble_supermatrix(self.network, X, self.cluster_weights)
        elif isinstance(X, Supermatrix):
            sm = X
        else:
            values = np.asarray(X, dtype=float)
            labels = tuple(f"e{i + 1}" for i in range(values.shape[0]))
            sm = Supermatrix(labels, values)
        res = limit_supermatrix(
            sm,
            eps=self.eps,
            max_pow=self.max_pow,
            cesaro_window=self.cesaro_window,
        )
        self.limit_ = res.limit
        self.method_ = res.method
        self.steps_ = res.steps
        self.labels_ = res.final_priorities.labels
        self.weights_ = res.final_priorities.weights
        self.columns_agree_ = res.columns_agree
        return self

    def ranking(self) -> list[str]:
        check_is_fitted(self, "weights_")
        order = sorted(range(len(self.labels_)), key=lambda i: -self.weights_[i])
        return [self.labels_[i] for i in order]
