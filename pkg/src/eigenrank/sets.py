"""Comparisons of alternative sets against the multiplicative expectation.

When the members of a set q are mutually independent, the dominance of q
over a single alternative k multiplies out: it is the product of each
member's pairwise dominance over k.  Observed set judgments that stray
from that product witness dependence among the members.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ElementInBothSides, NonPositiveValue, UnknownElement
from .matrix import ComparisonMatrix


@dataclass(frozen=True)
class SetJudgment:
    """Observed dominance of one alternative set over another."""

    left: tuple[str, ...]
    right: tuple[str, ...]
    value: float

    def __post_init__(self):
        left, right = tuple(self.left), tuple(self.right)
        if not left or not right:
            raise ValueError("both sides of a set judgment must be nonempty")
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise ValueError("sides must not repeat elements")
        value = float(self.value)
        if not math.isfinite(value) or value <= 0.0:
            raise NonPositiveValue(f"set judgment values must be positive, got {value!r}")
        if set(left) == set(right) and value != 1.0:
            raise ValueError("a set compared with itself must have value 1")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)


def expected_set_value(pc: ComparisonMatrix, q: Sequence[str], k: str) -> float:
    """Product of pairwise dominances: what q-over-k must equal under
    mutual independence of q's members.

    An empty q yields 1 (empty product).  `k` must not belong to q.
    """
    idx_k = pc.index(k)
    out = 1.0
    for a in q:
        if a == k:
            raise ElementInBothSides(f"{k!r} appears on both sides of the comparison")
        out *= float(pc.values[pc.index(a), idx_k])
    return out


@dataclass(frozen=True)
class IndependenceViolation:
    """One observed set judgment inconsistent with the matrix.

    `expected` carries the product-rule value when one applies; order-only
    violations (set versus set) leave it None.
    """

    judgment: SetJudgment
    expected: float | None

    def describe(self) -> str:
        where = (
            f"{list(self.judgment.left)} vs {list(self.judgment.right)}: "
            f"observed {self.judgment.value:.6g}"
        )
        if self.expected is None:
            side = "above" if self.judgment.value <= 1.0 else "below"
            return f"{where}, but every member-wise comparison points {side} 1"
        return f"{where}, expected {self.expected:.6g}"


def check_independence(
    pc: ComparisonMatrix, observed: Iterable[SetJudgment], tol: float = 1e-9
) -> list[IndependenceViolation]:
    """Observed set judgments that deviate from the product expectation.

    Judgments with a singleton on one side are checked against
    expected_set_value (mirrored through the reciprocal when the singleton
    is on the left).  Set-versus-set judgments have no product rule; they
    are only order-checked: a strictly dominant left side must carry a
    value above 1 when every member-wise comparison does.  An empty result
    certifies independence for everything covered.
    """
    out = []
    for sj in observed:
        for lab in sj.left + sj.right:
            pc.index(lab)  # raises UnknownElement for stray labels
        if set(sj.left) == set(sj.right):
            continue  # the constructor already pins the value to 1
        common = set(sj.left) & set(sj.right)
        if common:
            raise ElementInBothSides(
                f"{sorted(common)} appear on both sides of the comparison"
            )
        if len(sj.right) == 1:
            expected = expected_set_value(pc, sj.left, sj.right[0])
        elif len(sj.left) == 1:
            expected = 1.0 / expected_set_value(pc, sj.right, sj.left[0])
        else:
            # no product rule for set vs set; order-check only
            pairwise = [
                float(pc.values[pc.index(a), pc.index(b)])
                for a in sj.left
                for b in sj.right
            ]
            unanimous_over = all(p > 1.0 for p in pairwise)
            unanimous_under = all(p < 1.0 for p in pairwise)
            if (unanimous_over and sj.value <= 1.0) or (
                unanimous_under and sj.value >= 1.0
            ):
                out.append(IndependenceViolation(sj, None))
            continue
        if abs(sj.value - expected) > tol * expected:
            out.append(IndependenceViolation(sj, expected))
    return out
