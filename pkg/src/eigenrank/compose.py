"""Hierarchic composition: propagate priorities from the goal down.

Each level transition is a matrix whose column j holds the priorities of
the next level's elements with respect to criterion j (zeros for elements
that criterion does not compare).  Global weights are the running product
of these matrices applied to the goal's unit weight.

Mode semantics: propagation always uses sum-normalized (distributive)
columns, which is what makes the level-by-level product meaningful.  In
ideal mode every reported vector is rescaled afterwards so its maximum is
1; this is a positive per-vector rescaling, so rankings never differ
between modes on the same judgments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import InvalidHierarchy, LabelMismatch, MissingMatrix
from .matrix import ComparisonMatrix, build_matrix
from .priority import DISTRIBUTIVE, IDEAL, derive_priorities
from .structure import Hierarchy, Node, validate_hierarchy


def _check_mode(mode: str) -> str:
    if mode not in (DISTRIBUTIVE, IDEAL):
        raise ValueError(f"mode must be {DISTRIBUTIVE!r} or {IDEAL!r}, got {mode!r}")
    return mode


@dataclass(frozen=True)
class LabeledWeights:
    """A weight vector with its element labels."""

    labels: tuple[str, ...]
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).copy()
        if w.shape != (len(self.labels),):
            raise ValueError(
                f"expected {len(self.labels)} weights, got shape {w.shape}"
            )
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "labels", tuple(self.labels))

    def as_dict(self) -> dict[str, float]:
        return {lab: float(w) for lab, w in zip(self.labels, self.weights)}

    def ranking(self) -> list[str]:
        order = np.argsort(-self.weights, kind="stable")
        return [self.labels[i] for i in order]


@dataclass(frozen=True)
class LevelPriorityMatrix:
    """Priorities of one level's elements under each parent criterion.

    Column j is the priority vector of `row_labels` with respect to
    criterion `col_labels[j]`; elements the criterion does not compare
    hold 0 in that column.
    """

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).copy()
        if v.shape != (len(self.row_labels), len(self.col_labels)):
            raise ValueError(
                f"expected shape {(len(self.row_labels), len(self.col_labels))}, "
                f"got {v.shape}"
            )
        v.flags.writeable = False
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))


@dataclass(frozen=True)
class GlobalPriorities:
    """Weights per level, goal first, plus the final alternative weights."""

    per_level: tuple[LabeledWeights, ...]
    final: LabeledWeights
    mode: str


def level_matrix(
    h: Hierarchy,
    k: int,
    matrices: Mapping[str, ComparisonMatrix],
    mode: str = DISTRIBUTIVE,
) -> LevelPriorityMatrix:
    """Priorities of level k+1 elements under each level-k parent.

    `matrices` maps parent id to the comparison matrix of its children;
    every level-k parent with children needs one, with labels exactly the
    parent's children (any order).
    """
    _check_mode(mode)
    levels = h.levels()
    if k not in levels:
        raise ValueError(f"hierarchy has no level {k}")
    if k + 1 not in levels:
        raise ValueError(f"hierarchy has no level {k + 1} to weigh")
    parents = levels[k]
    rows = levels[k + 1]
    row_index = {lab: i for i, lab in enumerate(rows)}
    out = np.zeros((len(rows), len(parents)))
    for j, parent in enumerate(parents):
        kids = h.children_of(parent)
        if not kids:
            continue
        if parent not in matrices:
            raise MissingMatrix(f"no comparison matrix for parent {parent!r}")
        m = matrices[parent]
        if set(m.labels) != set(kids):
            raise LabelMismatch(
                f"matrix under {parent!r} covers {sorted(m.labels)}, "
                f"expected children {sorted(kids)}"
            )
        pv = derive_priorities(m, mode=mode)
        for lab, w in zip(pv.labels, pv.weights):
            out[row_index[lab], j] = w
    return LevelPriorityMatrix(rows, parents, out)


def compose(
    h: Hierarchy,
    matrices: Mapping[str, ComparisonMatrix],
    mode: str = DISTRIBUTIVE,
) -> GlobalPriorities:
    """Global priorities for every level of a valid hierarchy.

    The goal starts at weight 1; each step multiplies by the next level's
    priority matrix.  Reported vectors are the propagated (sum 1) weights
    in distributive mode, or the same vectors rescaled to max 1 in ideal
    mode.
    """
    _check_mode(mode)
    report = validate_hierarchy(h)
    if not report.ok:
        raise InvalidHierarchy(report)
    levels = h.levels()
    depth = h.depth()
    w = np.array([1.0])
    vectors = [LabeledWeights(levels[1], w)]
    for k in range(1, depth):
        lm = level_matrix(h, k, matrices, mode=DISTRIBUTIVE)
        w = lm.values @ w
        vectors.append(LabeledWeights(lm.row_labels, w))
    if mode == IDEAL:
        vectors = [
            LabeledWeights(v.labels, v.weights / v.weights.max()) for v in vectors
        ]
    return GlobalPriorities(tuple(vectors), vectors[-1], mode)


@dataclass(frozen=True)
class RankModeDemo:
    """Before/after rankings from adding one alternative, both modes."""

    added: str
    before: dict[str, GlobalPriorities]
    after: dict[str, GlobalPriorities]
    reversed_pairs: dict[str, tuple[tuple[str, str], ...]]

    def any_reversal(self, mode: str = DISTRIBUTIVE) -> bool:
        return bool(self.reversed_pairs[mode])


def _strict_order_flips(
    before: LabeledWeights, after: LabeledWeights, among: Iterable[str]
) -> tuple[tuple[str, str], ...]:
    """Pairs whose strict order inverted between two weight vectors."""
    among = [a for a in among if a in before.labels and a in after.labels]
    b, a = before.as_dict(), after.as_dict()
    flips = []
    for i, x in enumerate(among):
        for y in among[i + 1 :]:
            db, da = b[x] - b[y], a[x] - a[y]
            if (db > 0 and da < 0) or (db < 0 and da > 0):
                flips.append((x, y))
    return tuple(flips)


def add_alternative(
    h: Hierarchy,
    matrices: Mapping[str, ComparisonMatrix],
    new_id: str,
    parents: Iterable[str],
    judgments: Mapping[str, Mapping[str, float]],
) -> tuple[Hierarchy, dict[str, ComparisonMatrix]]:
    """Extend a hierarchy with one more leaf alternative.

    `judgments[parent][other]` is the dominance of the new element over
    `other` under that parent.  Untouched parents keep their matrices.
    """
    parents = tuple(parents)
    depth = h.depth()
    nodes = h.nodes + (Node(new_id, "alternative", depth),)
    edges = h.edges + tuple((p, new_id) for p in parents)
    h2 = Hierarchy(nodes, edges, rho=h.rho)
    out = dict(matrices)
    for p in parents:
        m = matrices[p]
        given = judgments[p]
        extended = m.upper_judgments() + [
            (new_id, other, float(given[other])) for other in m.labels
        ]
        out[p] = build_matrix(m.labels + (new_id,), extended)
    return h2, out


def rank_mode_demo(
    h: Hierarchy,
    matrices: Mapping[str, ComparisonMatrix],
    new_id: str,
    parents: Iterable[str],
    judgments: Mapping[str, Mapping[str, float]],
) -> RankModeDemo:
    """Report how adding one alternative shifts the original ranking.

    Runs composition before and after the addition under both modes and
    lists every pair of original alternatives whose strict order flipped.
    """
    h2, m2 = add_alternative(h, matrices, new_id, parents, judgments)
    originals = h.levels()[h.depth()]
    before, after, flips = {}, {}, {}
    for mode in (DISTRIBUTIVE, IDEAL):
        before[mode] = compose(h, matrices, mode)
        after[mode] = compose(h2, m2, mode)
        flips[mode] = _strict_order_flips(before[mode].final, after[mode].final, originals)
    return RankModeDemo(new_id, before, after, flips)


def copy_judgments(m: ComparisonMatrix, source: str) -> dict[str, float]:
    """Judgments that make a new element an exact copy of `source`.

    The copy ties with its source and repeats the source's row against
    everyone else.
    """
    out = {}
    for other in m.labels:
        out[other] = 1.0 if other == source else m.entry(source, other)
    return out


def find_rank_reversal(palette: Iterable[float] | None = None):
    """Bounded exhaustive search for a rank reversal instance.

    Scans a two-criterion, two-alternative hierarchy over the judgment
    palette: one value for the criteria comparison, one per criterion for
    the alternatives.  The added element is an exact copy of the then-best
    alternative.  Returns the first (palette-ordered) instance whose
    distributive ranking of the originals inverts, as
    (hierarchy, matrices, new_id, parents, judgments, demo), or None.
    """
    from .matrix import PALETTE

    if palette is None:
        palette = PALETTE
    palette = tuple(palette)
    nodes = (
        Node("goal", "goal", 1),
        Node("c1", "criterion", 2),
        Node("c2", "criterion", 2),
        Node("A", "alternative", 3),
        Node("B", "alternative", 3),
    )
    edges = (
        ("goal", "c1"),
        ("goal", "c2"),
        ("c1", "A"),
        ("c1", "B"),
        ("c2", "A"),
        ("c2", "B"),
    )
    h = Hierarchy(nodes, edges)
    for c in palette:
        goal_m = build_matrix(("c1", "c2"), [("c1", "c2", c)])
        for x in palette:
            m1 = build_matrix(("A", "B"), [("A", "B", x)])
            for y in palette:
                m2 = build_matrix(("A", "B"), [("A", "B", y)])
                matrices = {"goal": goal_m, "c1": m1, "c2": m2}
                best = compose(h, matrices).final.ranking()[0]
                judgments = {
                    p: copy_judgments(matrices[p], best) for p in ("c1", "c2")
                }
                demo = rank_mode_demo(h, matrices, "N", ("c1", "c2"), judgments)
                if demo.any_reversal(DISTRIBUTIVE):
                    return h, matrices, "N", ("c1", "c2"), judgments, demo
    return None
