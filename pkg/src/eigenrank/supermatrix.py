"""Network priorities via the supermatrix limit.

Each arc (source, target) contributes a block: the priorities of the
source component's elements with respect to each element of the target
component, placed in the target elements' columns.  Columns receiving
blocks from several source components weight them by cluster weights
(equal by default) so the assembled matrix is column stochastic on its
support.  Priorities come from the limit of successive powers, falling
back to a Cesàro average when the power sequence cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .compose import LabeledWeights, level_matrix
from .errors import (
    BadClusterWeights,
    InvalidHierarchy,
    InvalidNetwork,
    MissingMatrix,
    NoConvergence,
    NotColumnStochastic,
)
from .matrix import ComparisonMatrix
from .priority import derive_priorities
from .structure import Hierarchy, Network, validate_hierarchy, validate_network

EPS = 1e-10
MAX_POW = 10000
CESARO_WINDOW = 64

POWER = "power"
CESARO = "cesaro"


@dataclass(frozen=True)
class Supermatrix:
    """Square block matrix over all of a network's elements.

    Entry (i, j) is the weight element i receives when the network is
    viewed from element j.  Columns with any inbound arc sum to 1; columns
    of elements nothing depends on are zero.
    """

    element_labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).copy()
        n = len(self.element_labels)
        if v.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} matrix, got shape {v.shape}")
        if np.any(v < 0.0) or np.any(v > 1.0):
            raise ValueError("supermatrix entries must lie in [0, 1]")
        sums = v.sum(axis=0)
        support = sums > 0.0
        if np.any(np.abs(sums[support] - 1.0) > 1e-10):
            raise NotColumnStochastic(
                "every nonzero column of a supermatrix must sum to 1"
            )
        v.flags.writeable = False
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "element_labels", tuple(self.element_labels))

    @property
    def order(self) -> int:
        return len(self.element_labels)

    def zero_columns(self) -> tuple[str, ...]:
        sums = self.values.sum(axis=0)
        return tuple(
            lab for lab, s in zip(self.element_labels, sums) if s == 0.0
        )

    def column(self, label: str) -> LabeledWeights:
        j = self.element_labels.index(label)
        return LabeledWeights(self.element_labels, self.values[:, j])


def _cluster_weights_for(
    net: Network,
    target: str,
    sources: tuple[str, ...],
    cluster_weights: Mapping[str, Mapping[str, float]] | None,
) -> dict[str, float]:
    if cluster_weights is None or target not in cluster_weights:
        return {s: 1.0 / len(sources) for s in sources}
    given = dict(cluster_weights[target])
    if set(given) != set(sources):
        raise BadClusterWeights(
            f"cluster weights for {target!r} cover {sorted(given)}, "
            f"expected sources {sorted(sources)}"
        )
    total = sum(given.values())
    if any(w < 0 for w in given.values()) or abs(total - 1.0) > 1e-9:
        raise BadClusterWeights(
            f"cluster weights for {target!r} must be nonnegative and sum to 1, "
            f"got sum {total!r}"
        )
    return given


def assemble_supermatrix(
    net: Network,
    matrices: Mapping[tuple[str, str], ComparisonMatrix],
    cluster_weights: Mapping[str, Mapping[str, float]] | None = None,
) -> Supermatrix:
    """Assemble the supermatrix of a valid network.

    `matrices` is keyed by (target_element, source_component): the
    comparison of the source component's elements with respect to that
    target element.  Single-element source components need no matrix
    (their priority is the unit vector).  `cluster_weights` optionally
    maps each target component to per-source-component weights summing
    to 1; omitted targets weight their sources equally.
    """
    report = validate_network(net)
    if not report.ok:
        raise InvalidNetwork(report)
    order = net.element_order()
    pos = {lab: i for i, lab in enumerate(order)}
    n = len(order)
    out = np.zeros((n, n))
    for target_comp in net.components:
        sources = net.sources_into(target_comp.id)
        if not sources:
            continue
        weights = _cluster_weights_for(net, target_comp.id, sources, cluster_weights)
        for target_el in target_comp.elements:
            col = pos[target_el]
            for src_id in sources:
                src = net.component(src_id)
                if len(src.elements) == 1:
                    pv_labels, pv_weights = src.elements, np.array([1.0])
                else:
                    key = (target_el, src_id)
                    if key not in matrices:
                        raise MissingMatrix(
                            f"no comparison matrix for elements of {src_id!r} "
                            f"with respect to {target_el!r}"
                        )
                    m = matrices[key]
                    if set(m.labels) != set(src.elements):
                        raise MissingMatrix(
                            f"matrix for ({target_el!r}, {src_id!r}) covers "
                            f"{sorted(m.labels)}, expected {sorted(src.elements)}"
                        )
                    pv = derive_priorities(m)
                    pv_labels, pv_weights = pv.labels, pv.weights
                for lab, w in zip(pv_labels, pv_weights):
                    out[pos[lab], col] = weights[src_id] * w
    return Supermatrix(order, out)


def hierarchy_supermatrix(
    h: Hierarchy, matrices: Mapping[str, ComparisonMatrix]
) -> Supermatrix:
    """Embed a hierarchy as a column-stochastic supermatrix.

    Level transition blocks come from the same priority columns that
    hierarchic composition uses; the bottom level holds an identity block
    so weight reaching the alternatives stays there.  The limit's goal
    column then reproduces composition's final priorities.
    """
    report = validate_hierarchy(h)
    if not report.ok:
        raise InvalidHierarchy(report)
    levels = h.levels()
    depth = h.depth()
    order = tuple(lab for k in sorted(levels) for lab in levels[k])
    pos = {lab: i for i, lab in enumerate(order)}
    n = len(order)
    out = np.zeros((n, n))
    for k in range(1, depth):
        lm = level_matrix(h, k, matrices)
        for j, parent in enumerate(lm.col_labels):
            for i, child in enumerate(lm.row_labels):
                out[pos[child], pos[parent]] = lm.values[i, j]
    for leaf in levels[depth]:
        out[pos[leaf], pos[leaf]] = 1.0
    return Supermatrix(order, out)


@dataclass(frozen=True)
class LimitResult:
    """Converged limit of a supermatrix power sequence."""

    limit: np.ndarray
    method: str
    steps: int
    final_priorities: LabeledWeights
    columns_agree: bool

    def __post_init__(self):
        v = np.asarray(self.limit, dtype=float).copy()
        v.flags.writeable = False
        object.__setattr__(self, "limit", v)

    def column(self, label: str) -> LabeledWeights:
        """One limit column, normalized to sum 1.

        This is the view of the whole network from that element; for an
        embedded hierarchy the goal column carries the composed
        priorities.
        """
        labels = self.final_priorities.labels
        j = labels.index(label)
        col = self.limit[:, j]
        total = col.sum()
        return LabeledWeights(labels, col / total if total > 0 else col)


def limit_supermatrix(
    s: Supermatrix,
    eps: float = EPS,
    max_pow: int = MAX_POW,
    cesaro_window: int = CESARO_WINDOW,
) -> LimitResult:
    """Limit priorities of a fully column-stochastic supermatrix.

    Successive powers W^k are compared in max norm; if they settle within
    `eps` the power limit is returned.  If instead the running average of
    the last `cesaro_window` powers settles, that Cesàro average is
    returned (periodic case).  Zero columns are refused: mass would leak
    and the limit would not be a distribution (embed hierarchies via
    hierarchy_supermatrix, which closes the bottom level).

    final_priorities averages the limit's nonzero columns; columns_agree
    reports whether all nonzero columns match within 1e-6, which holds for
    irreducible networks but can fail for reducible ones, where per-column
    readings (from `limit`) are the honest answer.
    """
    w = s.values
    if s.zero_columns():
        raise NotColumnStochastic(
            f"supermatrix has zero columns {s.zero_columns()}; "
            "the limit needs every column stochastic"
        )
    power = w.copy()
    window: deque[np.ndarray] = deque(maxlen=cesaro_window)
    window.append(power.copy())
    prev_avg = None
    for step in range(1, max_pow + 1):
        nxt = w @ power
        if np.max(np.abs(nxt - power)) < eps:
            return _finish(s, nxt, POWER, step)
        window.append(nxt.copy())
        if len(window) == cesaro_window:
            avg = np.mean(window, axis=0)
            if prev_avg is not None and np.max(np.abs(avg - prev_avg)) < eps:
                return _finish(s, avg, CESARO, step)
            prev_avg = avg
        power = nxt
    raise NoConvergence(
        f"supermatrix powers did not settle within {max_pow} steps",
        last_iterate=power,
        iterations=max_pow,
    )


def _finish(s: Supermatrix, limit: np.ndarray, method: str, steps: int) -> LimitResult:
    sums = limit.sum(axis=0)
    support = sums > 1e-12
    cols = limit[:, support] / sums[support]
    spread = float(np.max(np.abs(cols - cols.mean(axis=1, keepdims=True)))) if cols.size else 0.0
    agree = spread < 1e-6
    pri = cols.mean(axis=1)
    total = pri.sum()
    if total > 0:
        pri = pri / total
    return LimitResult(limit, method, steps, LabeledWeights(s.element_labels, pri), agree)


def network_priorities(
    net: Network,
    matrices: Mapping[tuple[str, str], ComparisonMatrix],
    cluster_weights: Mapping[str, Mapping[str, float]] | None = None,
    **limit_opts,
) -> LimitResult:
    """Assemble a network's supermatrix and take its limit."""
    return limit_supermatrix(
        assemble_supermatrix(net, matrices, cluster_weights), **limit_opts
    )
