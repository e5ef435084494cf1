"""Decision structures: hierarchies, networks, and their validity checks.

A hierarchy is a leveled structure with a single goal on top; edges point
from a parent down to the elements compared beneath it.  A network drops
the leveling and connects whole components of elements, with arcs meaning
"the source component's elements are compared with respect to each target
element".  Validation never raises; it returns a report listing every
violation found, so callers can show all problems at once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import LabelMismatch, UnknownNode
from .matrix import ComparisonMatrix, check_homogeneity

GOAL = "goal"
CRITERION = "criterion"
ALTERNATIVE = "alternative"
NODE_KINDS = (GOAL, CRITERION, ALTERNATIVE)

DEFAULT_RHO = 9.0

ERROR = "error"
INFO = "info"


@dataclass(frozen=True)
class Node:
    """One element of a hierarchy, placed on a 1-based level."""

    id: str
    kind: str
    level: int

    def __post_init__(self):
        if not self.id or not isinstance(self.id, str):
            raise ValueError(f"node id must be a nonempty string, got {self.id!r}")
        if self.kind not in NODE_KINDS:
            raise ValueError(f"node kind must be one of {NODE_KINDS}, got {self.kind!r}")
        if not isinstance(self.level, int) or self.level < 1:
            raise ValueError(f"node level must be an integer >= 1, got {self.level!r}")


@dataclass(frozen=True)
class ValidationIssue:
    """One structural violation (or advisory note) found by a validator."""

    code: str
    severity: str
    subjects: tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[ValidationIssue, ...]

    @property
    def errors(self) -> tuple[ValidationIssue, ...]:
        return tuple(i for i in self.issues if i.severity == ERROR)

    @property
    def ok(self) -> bool:
        return not self.errors

    def codes(self) -> set[str]:
        return {i.code for i in self.issues}

    def by_code(self, code: str) -> tuple[ValidationIssue, ...]:
        return tuple(i for i in self.issues if i.code == code)

    def summary(self) -> str:
        if not self.issues:
            return "no issues"
        return "; ".join(f"{i.code}: {i.message}" for i in self.issues)


@dataclass(frozen=True)
class Hierarchy:
    """Leveled decision structure: one goal, criteria levels, alternatives.

    `edges` are (parent, child) pairs; children of any node must sit one
    level below it for the structure to validate.  The constructor only
    enforces referential integrity; call :func:`validate_hierarchy` for
    the full shape rules.
    """

    nodes: tuple[Node, ...]
    edges: tuple[tuple[str, str], ...]
    rho: float = DEFAULT_RHO

    def __post_init__(self):
        nodes = tuple(self.nodes)
        ids = [n.id for n in nodes]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate node ids: {dup}")
        known = set(ids)
        seen, edges = set(), []
        for p, c in self.edges:
            if p not in known:
                raise UnknownNode(f"edge references unknown node {p!r}")
            if c not in known:
                raise UnknownNode(f"edge references unknown node {c!r}")
            if (p, c) not in seen:
                seen.add((p, c))
                edges.append((p, c))
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", tuple(edges))

    def node(self, node_id: str) -> Node:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise UnknownNode(f"unknown node {node_id!r}")

    def levels(self) -> dict[int, tuple[str, ...]]:
        """Node ids per level, in declaration order."""
        out: dict[int, list[str]] = {}
        for n in self.nodes:
            out.setdefault(n.level, []).append(n.id)
        return {k: tuple(v) for k, v in sorted(out.items())}

    def depth(self) -> int:
        return max(n.level for n in self.nodes)

    def children_of(self, node_id: str) -> tuple[str, ...]:
        """Children in node-declaration order, so downstream output is stable."""
        self.node(node_id)
        direct = {c for p, c in self.edges if p == node_id}
        return tuple(n.id for n in self.nodes if n.id in direct)

    def parents_of(self, node_id: str) -> tuple[str, ...]:
        self.node(node_id)
        direct = {p for p, c in self.edges if c == node_id}
        return tuple(n.id for n in self.nodes if n.id in direct)


def validate_hierarchy(h: Hierarchy) -> ValidationReport:
    """Check the hierarchy shape rules, reporting every violation.

    Error codes:
      top-level-not-singleton  level 1 must hold exactly one node
      misplaced-goal           goal-kind nodes belong on level 1 and only there
      empty-level              levels must be contiguous from 1 to the depth
      level-skip               an edge jumps down more than one level
      reverse-dependence       an edge points to the same or a higher level
      inner-dependence         an edge links two nodes on the same level
      cycle                    edges loop back on themselves
      orphan                   a non-goal node no parent compares
      childless                a non-leaf-level node with nothing beneath it
    """
    issues: list[ValidationIssue] = []
    levels = h.levels()
    depth = h.depth()

    top = levels.get(1, ())
    if len(top) != 1:
        issues.append(
            ValidationIssue(
                "top-level-not-singleton",
                ERROR,
                top,
                f"level 1 must hold exactly one node, found {len(top)}",
            )
        )
    for n in h.nodes:
        if n.kind == GOAL and n.level != 1:
            issues.append(
                ValidationIssue(
                    "misplaced-goal", ERROR, (n.id,), f"goal node {n.id!r} sits on level {n.level}"
                )
            )
        if n.kind != GOAL and n.level == 1:
            issues.append(
                ValidationIssue(
                    "misplaced-goal", ERROR, (n.id,), f"level 1 node {n.id!r} is not a goal"
                )
            )
    for k in range(1, depth + 1):
        if k not in levels:
            issues.append(
                ValidationIssue("empty-level", ERROR, (), f"level {k} holds no nodes")
            )

    for p, c in h.edges:
        lp, lc = h.node(p).level, h.node(c).level
        if lc == lp:
            issues.append(
                ValidationIssue(
                    "inner-dependence",
                    ERROR,
                    (p, c),
                    f"{p!r} and {c!r} share level {lp}; same-level comparison links "
                    "are a network feature, not a hierarchy one",
                )
            )
        elif lc < lp:
            issues.append(
                ValidationIssue(
                    "reverse-dependence",
                    ERROR,
                    (p, c),
                    f"edge {p!r} -> {c!r} climbs from level {lp} to level {lc}",
                )
            )
        elif lc > lp + 1:
            issues.append(
                ValidationIssue(
                    "level-skip",
                    ERROR,
                    (p, c),
                    f"edge {p!r} -> {c!r} skips from level {lp} to level {lc}",
                )
            )

    for comp in _cycle_components((n.id for n in h.nodes), h.edges):
        issues.append(
            ValidationIssue(
                "cycle", ERROR, comp, f"edges among {list(comp)} form a cycle"
            )
        )

    for n in h.nodes:
        if n.level > 1 and not h.parents_of(n.id):
            issues.append(
                ValidationIssue(
                    "orphan", ERROR, (n.id,), f"node {n.id!r} has no parent comparing it"
                )
            )
        if n.level < depth and not h.children_of(n.id):
            issues.append(
                ValidationIssue(
                    "childless", ERROR, (n.id,), f"node {n.id!r} has nothing beneath it"
                )
            )

    return ValidationReport(tuple(issues))


def _cycle_components(
    nodes: Iterable[str], edges: Iterable[tuple[str, str]]
) -> list[tuple[str, ...]]:
    """Strongly connected components containing a cycle (iterative Tarjan)."""
    adj: dict[str, list[str]] = {n: [] for n in nodes}
    for p, c in edges:
        adj[p].append(c)
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    counter = itertools.count()
    out: list[tuple[str, ...]] = []

    def strongconnect(root: str):
        index[root] = low[root] = next(counter)
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(adj[root]))]
        while work:
            node, it = work[-1]
            pushed = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = next(counter)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj[w])))
                    pushed = True
                    break
                if w in on_stack:
                    low[node] = min(low[node], index[w])
            if pushed:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                if len(comp) > 1 or node in adj[node]:
                    out.append(tuple(sorted(comp)))

    for v in adj:
        if v not in index:
            strongconnect(v)
    return out


@dataclass(frozen=True)
class Component:
    """A cluster of elements compared as a group inside a network."""

    id: str
    elements: tuple[str, ...]

    def __post_init__(self):
        if not self.id or not isinstance(self.id, str):
            raise ValueError(f"component id must be a nonempty string, got {self.id!r}")
        elements = tuple(self.elements)
        if not elements:
            raise ValueError(f"component {self.id!r} must hold at least one element")
        if len(set(elements)) != len(elements):
            raise ValueError(f"component {self.id!r} repeats an element")
        object.__setattr__(self, "elements", elements)


@dataclass(frozen=True)
class Network:
    """Components plus arcs; arc (src, dst) means dst's elements weigh src's.

    An arc from a component to itself declares inner dependence: the
    component's own elements are compared with respect to each other.
    Constructor tolerates arcs naming unknown components so that a parse
    step can hand everything to :func:`validate_network` for reporting.
    """

    components: tuple[Component, ...]
    arcs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        comps = tuple(self.components)
        ids = [c.id for c in comps]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate component ids: {dup}")
        flat = [e for c in comps for e in c.elements]
        if len(set(flat)) != len(flat):
            dup = sorted({e for e in flat if flat.count(e) > 1})
            raise ValueError(f"element ids repeat across components: {dup}")
        seen, arcs = set(), []
        for s, d in self.arcs:
            if (s, d) not in seen:
                seen.add((s, d))
                arcs.append((s, d))
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "arcs", tuple(arcs))

    def component(self, comp_id: str) -> Component:
        for c in self.components:
            if c.id == comp_id:
                return c
        raise UnknownNode(f"unknown component {comp_id!r}")

    def element_order(self) -> tuple[str, ...]:
        """All elements, component by component in declaration order."""
        return tuple(e for c in self.components for e in c.elements)

    def sources_into(self, comp_id: str) -> tuple[str, ...]:
        """Components whose elements feed weights into `comp_id`'s columns."""
        self.component(comp_id)
        inbound = {s for s, d in self.arcs if d == comp_id}
        return tuple(c.id for c in self.components if c.id in inbound)

    def has_inner_dependence(self, comp_id: str) -> bool:
        return (comp_id, comp_id) in self.arcs


def validate_network(net: Network) -> ValidationReport:
    """Check network wiring, reporting every problem.

    Error codes:
      dangling-arc        an arc references an unknown component
      isolated-component  a component with no arc in or out

    Advisory codes:
      inner-dependence    a self-arc; legitimate, but worth surfacing
    """
    issues: list[ValidationIssue] = []
    known = {c.id for c in net.components}
    touched: set[str] = set()
    for s, d in net.arcs:
        missing = [x for x in (s, d) if x not in known]
        if missing:
            issues.append(
                ValidationIssue(
                    "dangling-arc",
                    ERROR,
                    (s, d),
                    f"arc ({s!r}, {d!r}) references unknown component(s) {missing}",
                )
            )
            continue
        touched.update((s, d))
        if s == d:
            issues.append(
                ValidationIssue(
                    "inner-dependence",
                    INFO,
                    (s,),
                    f"component {s!r} depends on itself (inner dependence)",
                )
            )
    for c in net.components:
        if c.id not in touched:
            issues.append(
                ValidationIssue(
                    "isolated-component",
                    ERROR,
                    (c.id,),
                    f"component {c.id!r} has no arcs in or out",
                )
            )
    return ValidationReport(tuple(issues))


def hierarchy_to_network(h: Hierarchy) -> Network:
    """Recast a hierarchy as a network: one component per level.

    Each level becomes a component "level-k"; every adjacent pair gets the
    arc (level-(k+1), level-k): the lower level's elements are weighed
    with respect to each upper-level element, exactly as the hierarchy's
    comparison matrices have it.
    """
    levels = h.levels()
    comps = tuple(Component(f"level-{k}", ids) for k, ids in levels.items())
    arcs = tuple(
        (f"level-{k + 1}", f"level-{k}") for k in range(1, h.depth()) if k + 1 in levels
    )
    return Network(comps, arcs)


def check_group_homogeneity(
    h: Hierarchy, matrices: Mapping[str, ComparisonMatrix], rho: float | None = None
) -> list[tuple[str, tuple[int, int]]]:
    """Judgments outside [1/rho, rho] across a hierarchy's matrices.

    `matrices` maps parent node id to the comparison matrix of its
    children.  Labels must match the children exactly (any order).
    Returns (parent, (i, j)) index pairs per violation.
    """
    if rho is None:
        rho = h.rho
    out: list[tuple[str, tuple[int, int]]] = []
    for parent, m in matrices.items():
        kids = h.children_of(parent)
        if set(m.labels) != set(kids):
            raise LabelMismatch(
                f"matrix under {parent!r} covers {sorted(m.labels)}, "
                f"expected children {sorted(kids)}"
            )
        for pair in check_homogeneity(m, rho):
            out.append((parent, pair))
    return out
