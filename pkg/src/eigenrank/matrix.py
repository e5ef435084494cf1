"""Pairwise comparison matrices and the checks that guard them.

A judgment matrix holds positive dominance ratios: entry (i, j) says how
strongly element i dominates element j.  Only the upper triangle is
authoritative; the diagonal is fixed at 1 and the lower triangle is always
the floating-point reciprocal of the upper, so reciprocity cannot drift no
matter where the values came from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateLabel,
    DuplicatePair,
    InvalidRho,
    MissingPair,
    NonPositiveValue,
    ReciprocityViolation,
    SelfComparison,
    UnknownElement,
)

#: relative tolerance used when accepting a full matrix from the outside
RECIPROCITY_TOL = 1e-12

#: absolute tolerance for treating a judgment as exact indifference (value 1)
INDIFFERENCE_TOL = 1e-12

#: default relative tolerance for the exact-consistency test
CONSISTENCY_TOL = 1e-9

#: the 1..9 judgment palette with reciprocals, ordered ascending
PALETTE = tuple(1.0 / k for k in range(9, 1, -1)) + tuple(float(k) for k in range(1, 10))


def check_labels(labels: Sequence[str]) -> tuple[str, ...]:
    """Validate an element id sequence: nonempty strings, no duplicates."""
    labels = tuple(labels)
    if not labels:
        raise ValueError("label sequence must not be empty")
    seen = set()
    for lab in labels:
        if not isinstance(lab, str) or not lab:
            raise ValueError(f"labels must be nonempty strings, got {lab!r}")
        if lab in seen:
            raise DuplicateLabel(f"duplicate label {lab!r}")
        seen.add(lab)
    return labels


def _check_value(value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise NonPositiveValue(f"judgment values must be positive finite reals, got {value!r}")
    return value


@dataclass(frozen=True)
class Judgment:
    """One pairwise dominance statement: row dominates col by `value`."""

    row: str
    col: str
    value: float

    def __post_init__(self):
        _check_value(self.value)
        if self.row == self.col and self.value != 1.0:
            raise SelfComparison(f"{self.row!r} compared against itself must have value 1")


@dataclass(frozen=True)
class ComparisonMatrix:
    """Positive reciprocal judgment matrix over an ordered label sequence.

    Do not call the constructor with hand-built arrays; use
    :func:`build_matrix` (from judgments) or :meth:`from_array` (from a
    full candidate matrix), both of which normalize storage so that each
    below-diagonal entry is exactly ``1 / entry`` of its mirror.
    """

    labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        check_labels(self.labels)
        vals = np.asarray(self.values, dtype=float)
        n = len(self.labels)
        if vals.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} matrix, got shape {vals.shape}")
        if not np.all(np.isfinite(vals)) or np.any(vals <= 0.0):
            raise NonPositiveValue("matrix entries must be positive finite reals")
        if np.any(np.diag(vals) != 1.0):
            raise ReciprocityViolation("diagonal entries must equal 1 exactly")
        iu, ju = np.triu_indices(n, k=1)
        if not np.array_equal(vals[ju, iu], 1.0 / vals[iu, ju]):
            raise ReciprocityViolation(
                "lower triangle must be the exact reciprocal of the upper; "
                "use build_matrix or ComparisonMatrix.from_array"
            )
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def order(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownElement(f"unknown element {label!r}") from None

    def entry(self, row: str, col: str) -> float:
        return float(self.values[self.index(row), self.index(col)])

    def upper_judgments(self) -> list[Judgment]:
        """The authoritative upper triangle as judgments, row-major."""
        out = []
        for i in range(self.order):
            for j in range(i + 1, self.order):
                out.append(Judgment(self.labels[i], self.labels[j], float(self.values[i, j])))
        return out

    @classmethod
    def from_array(cls, labels: Sequence[str], values, tol: float = RECIPROCITY_TOL) -> "ComparisonMatrix":
        """Accept a full candidate matrix, checking reciprocity within `tol`.

        The lower triangle of the result is re-derived from the upper, so
        tiny asymmetries in the input are discarded rather than stored.
        """
        labels = check_labels(labels)
        vals = np.asarray(values, dtype=float)
        n = len(labels)
        if vals.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} matrix, got shape {vals.shape}")
        if not np.all(np.isfinite(vals)) or np.any(vals <= 0.0):
            raise NonPositiveValue("matrix entries must be positive finite reals")
        if np.any(np.abs(np.diag(vals) - 1.0) > tol):
            raise ReciprocityViolation("diagonal entries must equal 1")
        iu, ju = np.triu_indices(n, k=1)
        upper = vals[iu, ju]
        lower = vals[ju, iu]
        if np.any(np.abs(lower * upper - 1.0) > tol):
            bad = int(np.argmax(np.abs(lower * upper - 1.0)))
            raise ReciprocityViolation(
                f"entries ({labels[ju[bad]]}, {labels[iu[bad]]}) and "
                f"({labels[iu[bad]]}, {labels[ju[bad]]}) are not reciprocal"
            )
        clean = np.eye(n)
        clean[iu, ju] = upper
        clean[ju, iu] = 1.0 / upper
        return cls(labels, clean)


def as_comparison_matrix(x, labels: Sequence[str] | None = None) -> ComparisonMatrix:
    """Coerce input to a :class:`ComparisonMatrix`.

    Accepts an existing matrix (returned as-is when `labels` is None) or
    any square array-like, generating labels ``x1..xn`` when none are given.
    """
    if isinstance(x, ComparisonMatrix):
        if labels is not None and tuple(labels) != x.labels:
            raise UnknownElement("labels argument conflicts with the matrix's own labels")
        return x
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if labels is None:
        labels = tuple(f"x{i + 1}" for i in range(arr.shape[0]))
    return ComparisonMatrix.from_array(labels, arr)


def build_matrix(labels: Sequence[str], judgments: Iterable) -> ComparisonMatrix:
    """Build a reciprocal matrix from one judgment per unordered pair.

    `judgments` may contain :class:`Judgment` objects or plain
    ``(row, col, value)`` tuples, in either orientation per pair.  Exactly
    n(n-1)/2 judgments covering all pairs are required; the mirror entry of
    each judgment is derived, never read from input.
    """
    labels = check_labels(labels)
    n = len(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    vals = np.eye(n)
    seen: set[frozenset] = set()
    for item in judgments:
        j = item if isinstance(item, Judgment) else Judgment(*item)
        if j.row not in idx:
            raise UnknownElement(f"unknown element {j.row!r}")
        if j.col not in idx:
            raise UnknownElement(f"unknown element {j.col!r}")
        if j.row == j.col:
            raise SelfComparison(f"pair ({j.row}, {j.col}) compares an element with itself")
        key = frozenset((j.row, j.col))
        if key in seen:
            raise DuplicatePair(f"pair ({j.row}, {j.col}) judged more than once")
        seen.add(key)
        r, c = idx[j.row], idx[j.col]
        # normalize to the upper triangle, which is the stored side
        if r < c:
            vals[r, c] = j.value
        else:
            vals[c, r] = 1.0 / j.value
    missing = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if frozenset((labels[i], labels[j])) not in seen
    ]
    if missing:
        raise MissingPair(missing)
    iu, ju = np.triu_indices(n, k=1)
    vals[ju, iu] = 1.0 / vals[iu, ju]
    return ComparisonMatrix(labels, vals)


def is_consistent(m: ComparisonMatrix, tol: float = CONSISTENCY_TOL) -> bool:
    """True iff a_ij * a_jk = a_ik holds for all triples, within relative `tol`."""
    a = m.values
    prod = a[:, :, None] * a[None, :, :]   # [i, j, k] -> a_ij * a_jk
    target = a[:, None, :]                 # [i, _, k] -> a_ik
    return bool(np.all(np.abs(prod - target) <= tol * target))


def check_row_dominance(m: ComparisonMatrix) -> list[tuple[int, int, int]]:
    """Triples (i, j, k) where a_ij > 1 yet a_ik < a_jk.

    These are exactly the situations in which the derived weight order can
    contradict the direct pairwise judgment.  Indices are 0-based,
    row-major. Empty for any consistent matrix.
    """
    a = m.values
    dominates = a[:, :, None] > 1.0          # [i, j, _]
    undercut = a[:, None, :] < a[None, :, :]  # [i, j, k] -> a_ik < a_jk
    return [tuple(int(v) for v in t) for t in np.argwhere(dominates & undercut)]


#: relation tokens accepted by check_scale_agreement
PREFERRED = ">"
INDIFFERENT = "="


@dataclass(frozen=True)
class ScaleViolation:
    """A stated preference that the matrix entry contradicts."""

    left: str
    relation: str
    right: str
    entry: float

    def describe(self) -> str:
        want = "a value > 1" if self.relation == PREFERRED else "the value 1"
        return (
            f"stated {self.left} {self.relation} {self.right} "
            f"but the matrix holds {self.entry:.6g} (expected {want})"
        )


def check_scale_agreement(m: ComparisonMatrix, stated_prefs: Iterable) -> list[ScaleViolation]:
    """Check stated preferences against matrix entries.

    `stated_prefs` holds ``(left, relation, right)`` triples with relation
    one of ``">"``, ``"="`` or ``"<"`` (the mirror of ``">"``).  A stated
    strict preference demands an entry strictly above 1; stated
    indifference demands an entry within ``INDIFFERENCE_TOL`` of 1.
    """
    out = []
    for left, relation, right in stated_prefs:
        if relation == "<":
            left, right, relation = right, left, PREFERRED
        if relation not in (PREFERRED, INDIFFERENT):
            raise ValueError(f"unknown relation {relation!r}; use '>', '=' or '<'")
        value = m.entry(left, right)
        indifferent = abs(value - 1.0) <= INDIFFERENCE_TOL
        if relation == PREFERRED and (indifferent or value <= 1.0):
            out.append(ScaleViolation(left, relation, right, value))
        elif relation == INDIFFERENT and not indifferent:
            out.append(ScaleViolation(left, relation, right, value))
    return out


def check_homogeneity(m: ComparisonMatrix, rho: float) -> list[tuple[int, int]]:
    """Index pairs (i, j) whose entry falls outside [1/rho, rho].

    Both orientations of an offending pair are reported, since the
    reciprocal of an entry above rho necessarily falls below 1/rho.
    """
    rho = float(rho)
    if not math.isfinite(rho) or rho < 1.0:
        raise InvalidRho(f"rho must be a real >= 1, got {rho!r}")
    a = m.values
    outside = (a > rho) | (a < 1.0 / rho)
    return [tuple(int(v) for v in t) for t in np.argwhere(outside)]
