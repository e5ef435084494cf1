"""Derive priority weights from a judgment matrix.

The weight vector is the principal right eigenvector of the matrix,
computed by power iteration and normalized to sum 1 (distributive mode)
or to max 1 (ideal mode).  Consistency is measured against the random
index of reciprocal matrices filled uniformly from the 1..9 palette.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NoConvergence
from .matrix import (
    CONSISTENCY_TOL,
    PALETTE,
    ComparisonMatrix,
    as_comparison_matrix,
    is_consistent,
)

DISTRIBUTIVE = "distributive"
IDEAL = "ideal"

#: sampling parameters behind the cached default random-index table
RI_SAMPLES = 5000
RI_SEED = 0

MAX_ITER = 1000
CONVERGENCE_EPS = 1e-12


@dataclass(frozen=True)
class PriorityVector:
    """Weights for a label sequence, plus eigenvalue bookkeeping."""

    labels: tuple[str, ...]
    weights: np.ndarray
    lambda_max: float
    mode: str
    n_iter: int

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).copy()
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "labels", tuple(self.labels))

    def as_dict(self) -> dict[str, float]:
        return {lab: float(w) for lab, w in zip(self.labels, self.weights)}

    def ranking(self) -> list[str]:
        """Labels ordered best first; ties keep label order (stable sort)."""
        order = np.argsort(-self.weights, kind="stable")
        return [self.labels[i] for i in order]


def _power_iterate(a: np.ndarray, max_iter: int, eps: float) -> tuple[np.ndarray, int]:
    n = a.shape[0]
    w = np.full(n, 1.0 / n)
    for it in range(1, max_iter + 1):
        nxt = a @ w
        nxt /= nxt.sum()
        if np.max(np.abs(nxt - w)) < eps:
            return nxt, it
        w = nxt
    raise NoConvergence(
        f"power iteration did not converge within {max_iter} iterations",
        last_iterate=w,
        iterations=max_iter,
    )


def derive_priorities(
    m,
    mode: str = DISTRIBUTIVE,
    max_iter: int = MAX_ITER,
    eps: float = CONVERGENCE_EPS,
) -> PriorityVector:
    """Principal eigenvector of a judgment matrix as a priority vector.

    Distributive mode normalizes weights to sum 1; ideal mode divides by
    the largest weight so the best element scores exactly 1.  lambda_max
    is the mean Rayleigh ratio (A w)_i / w_i at the converged vector.
    """
    m = as_comparison_matrix(m)
    if mode not in (DISTRIBUTIVE, IDEAL):
        raise ValueError(f"mode must be {DISTRIBUTIVE!r} or {IDEAL!r}, got {mode!r}")
    if m.order == 1:
        w = np.array([1.0])
        return PriorityVector(m.labels, w, 1.0, mode, 0)
    w, n_iter = _power_iterate(m.values, max_iter, eps)
    lam = float(np.mean((m.values @ w) / w))
    if mode == IDEAL:
        w = w / w.max()
    return PriorityVector(m.labels, w, lam, mode, n_iter)


@functools.cache
def _default_ri(n: int) -> float:
    return random_index(n, samples=RI_SAMPLES, seed=RI_SEED)


def random_index(n: int, samples: int = RI_SAMPLES, seed: int = RI_SEED) -> float:
    """Mean consistency index of random reciprocal palette matrices.

    Each sample draws its upper triangle uniformly from the seventeen
    palette values (1..9 and reciprocals); the lower triangle mirrors it.
    Deterministic for a given (n, samples, seed).  Orders 1 and 2 admit no
    inconsistency, so their index is 0.
    """
    if n < 1:
        raise ValueError(f"matrix order must be >= 1, got {n}")
    if n <= 2:
        return 0.0
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    palette = np.array(PALETTE)
    iu, ju = np.triu_indices(n, k=1)
    draws = rng.integers(0, len(palette), size=(samples, len(iu)))
    mats = np.tile(np.eye(n), (samples, 1, 1))
    mats[:, iu, ju] = palette[draws]
    mats[:, ju, iu] = 1.0 / palette[draws]

    # batched power iteration; einsum keeps the reduction order fixed
    w = np.full((samples, n), 1.0 / n)
    for _ in range(10000):
        nxt = np.einsum("sij,sj->si", mats, w)
        nxt /= nxt.sum(axis=1, keepdims=True)
        if np.max(np.abs(nxt - w)) < 1e-13:
            w = nxt
            break
        w = nxt
    lam = np.mean(np.einsum("sij,sj->si", mats, w) / w, axis=1)
    ci = (lam - n) / (n - 1)
    return float(np.mean(ci))


@dataclass(frozen=True)
class ConsistencyReport:
    """Consistency diagnostics for one matrix and its derived weights."""

    lambda_max: float
    ci: float
    ri: float
    cr: float
    consistent: bool
    worst_entry: tuple[int, int] | None
    worst_triple: tuple[int, int, int] | None


def consistency_report(m, pv: PriorityVector | None = None, ri: float | None = None) -> ConsistencyReport:
    """Compute CI and CR, locating the worst entry and worst triple.

    The worst entry maximizes |ln(a_ij * w_j / w_i)|, i.e. the judgment
    farthest (in ratio) from what the derived weights would predict; the
    worst triple maximizes |ln(a_ij * a_jk / a_ik)|.  Both are None when
    the matrix passes the exact-consistency test.
    """
    m = as_comparison_matrix(m)
    if pv is None:
        pv = derive_priorities(m)
    if pv.labels != m.labels:
        raise DimensionMismatch(
            f"priority labels {pv.labels} do not match matrix labels {m.labels}"
        )
    n = m.order
    lam = pv.lambda_max
    ci = (lam - n) / (n - 1) if n >= 2 else 0.0
    if ri is None:
        ri = _default_ri(n)
    cr = ci / ri if ri > 0.0 else 0.0
    if is_consistent(m, CONSISTENCY_TOL):
        return ConsistencyReport(lam, ci, ri, cr, True, None, None)
    a = m.values
    w = pv.weights / pv.weights.sum()  # entry deviations need sum-normalized weights
    dev_entry = np.abs(np.log(a * w[None, :] / w[:, None]))
    i, j = np.unravel_index(int(np.argmax(dev_entry)), dev_entry.shape)
    prod = a[:, :, None] * a[None, :, :]
    dev_triple = np.abs(np.log(prod / a[:, None, :]))
    t = np.unravel_index(int(np.argmax(dev_triple)), dev_triple.shape)
    return ConsistencyReport(
        lam, ci, ri, cr, False, (int(i), int(j)), tuple(int(v) for v in t)
    )


def consistent_completion(m: ComparisonMatrix, row: str, col: str) -> float:
    """The value at (row, col) that the derived weights would predict.

    Useful as a revision suggestion for the worst entry: replacing a_ij
    with w_i / w_j moves the matrix toward consistency.
    """
    pv = derive_priorities(m)
    w = pv.weights / pv.weights.sum()
    return float(w[m.index(row)] / w[m.index(col)])
