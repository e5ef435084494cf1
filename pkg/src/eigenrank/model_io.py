"""Read and write decision model documents.

A model document is a JSON object describing either a hierarchy (nodes
with levels, parent-child edges) or a network (components, arcs), plus
settings (rank mode, rho, consistency threshold) and optional seeded
judgments.  The schema carries a format_version so files stay readable
as the format evolves.

Judgment contexts: in a hierarchy each non-leaf node is a context whose
elements are its children, identified by the node id.  In a network each
(source component, target element) pair is a context, identified as
"source@target".
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import ParseError
from .priority import DISTRIBUTIVE, IDEAL
from .structure import (
    NODE_KINDS,
    Component,
    Hierarchy,
    Network,
    Node,
)

FORMAT_VERSION = 1

#: ids must be URL-path and context-separator safe
ID_PATTERN = re.compile(r"^[A-Za-z0-9_.\-]+$")

DEFAULT_RHO = 9.0
DEFAULT_CR_THRESHOLD = 0.1

HIERARCHY = "hierarchy"
NETWORK = "network"


@dataclass(frozen=True)
class SeededJudgment:
    context: str
    row: str
    col: str
    value: float


@dataclass(frozen=True)
class Model:
    """A parsed model document, structure plus session settings."""

    kind: str
    structure: Hierarchy | Network
    mode: str = DISTRIBUTIVE
    rho: float = DEFAULT_RHO
    cr_threshold: float = DEFAULT_CR_THRESHOLD
    judgments: tuple[SeededJudgment, ...] = ()
    cluster_weights: dict[str, dict[str, float]] | None = None


def _check_id(value, what: str, problems: list[str]) -> str | None:
    if not isinstance(value, str) or not ID_PATTERN.match(value):
        problems.append(
            f"{what} must be a string of letters, digits, '_', '.', '-'; got {value!r}"
        )
        return None
    return value


def _get_judgments(doc: dict, problems: list[str]) -> list[SeededJudgment]:
    out = []
    raw = doc.get("judgments", [])
    if not isinstance(raw, list):
        problems.append("judgments must be a list")
        return out
    for i, item in enumerate(raw):
        where = f"judgments[{i}]"
        if not isinstance(item, dict):
            problems.append(f"{where} must be an object")
            continue
        context = item.get("context")
        pair = item.get("pair")
        value = item.get("value")
        if not isinstance(context, str):
            problems.append(f"{where}.context must be a string")
            continue
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(p, str) for p in pair)
        ):
            problems.append(f"{where}.pair must be a pair of element ids")
            continue
        if not isinstance(value, (int, float)) or isinstance(value, bool) or value <= 0:
            problems.append(f"{where}.value must be a positive number")
            continue
        out.append(SeededJudgment(context, pair[0], pair[1], float(value)))
    return out


def _get_settings(doc: dict, problems: list[str]) -> tuple[str, float, float]:
    mode = doc.get("mode", DISTRIBUTIVE)
    if mode not in (DISTRIBUTIVE, IDEAL):
        problems.append(f"mode must be {DISTRIBUTIVE!r} or {IDEAL!r}, got {mode!r}")
        mode = DISTRIBUTIVE
    rho = doc.get("rho", DEFAULT_RHO)
    if not isinstance(rho, (int, float)) or isinstance(rho, bool) or rho < 1:
        problems.append(f"rho must be a number >= 1, got {rho!r}")
        rho = DEFAULT_RHO
    thr = doc.get("cr_threshold", DEFAULT_CR_THRESHOLD)
    if not isinstance(thr, (int, float)) or isinstance(thr, bool) or thr < 0:
        problems.append(f"cr_threshold must be a nonnegative number, got {thr!r}")
        thr = DEFAULT_CR_THRESHOLD
    return mode, float(rho), float(thr)


def _parse_hierarchy(doc: dict, problems: list[str]) -> Hierarchy | None:
    nodes = []
    raw_nodes = doc.get("nodes")
    if not isinstance(raw_nodes, list) or not raw_nodes:
        problems.append("hierarchy documents need a nonempty 'nodes' list")
        return None
    for i, item in enumerate(raw_nodes):
        where = f"nodes[{i}]"
        if not isinstance(item, dict):
            problems.append(f"{where} must be an object")
            continue
        node_id = _check_id(item.get("id"), f"{where}.id", problems)
        kind = item.get("kind")
        level = item.get("level")
        if kind not in NODE_KINDS:
            problems.append(f"{where}.kind must be one of {list(NODE_KINDS)}, got {kind!r}")
            continue
        if not isinstance(level, int) or isinstance(level, bool) or level < 1:
            problems.append(f"{where}.level must be an integer >= 1, got {level!r}")
            continue
        if node_id is not None:
            nodes.append(Node(node_id, kind, level))
    known = {n.id for n in nodes}
    if len(known) != len(nodes):
        problems.append("node ids must be unique")
        return None
    edges = []
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        problems.append("edges must be a list of [parent, child] pairs")
        raw_edges = []
    for i, item in enumerate(raw_edges):
        if not (isinstance(item, list) and len(item) == 2):
            problems.append(f"edges[{i}] must be a [parent, child] pair")
            continue
        p, c = item
        missing = [x for x in (p, c) if x not in known]
        if missing:
            problems.append(f"edges[{i}] references unknown node(s) {missing}")
            continue
        edges.append((p, c))
    if problems:
        return None
    rho = doc.get("rho", DEFAULT_RHO)
    return Hierarchy(tuple(nodes), tuple(edges), rho=float(rho))


def _parse_network(doc: dict, problems: list[str]) -> Network | None:
    comps = []
    raw_comps = doc.get("components")
    if not isinstance(raw_comps, list) or not raw_comps:
        problems.append("network documents need a nonempty 'components' list")
        return None
    for i, item in enumerate(raw_comps):
        where = f"components[{i}]"
        if not isinstance(item, dict):
            problems.append(f"{where} must be an object")
            continue
        comp_id = _check_id(item.get("id"), f"{where}.id", problems)
        elements = item.get("elements")
        if not isinstance(elements, list) or not elements:
            problems.append(f"{where}.elements must be a nonempty list")
            continue
        element_ids = [
            _check_id(e, f"{where}.elements[{j}]", problems)
            for j, e in enumerate(elements)
        ]
        if comp_id is not None and all(e is not None for e in element_ids):
            comps.append(Component(comp_id, tuple(element_ids)))
    arcs = []
    raw_arcs = doc.get("arcs", [])
    if not isinstance(raw_arcs, list):
        problems.append("arcs must be a list of [source, target] pairs")
        raw_arcs = []
    for i, item in enumerate(raw_arcs):
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, str) for x in item)):
            problems.append(f"arcs[{i}] must be a [source, target] pair")
            continue
        arcs.append((item[0], item[1]))  # dangling refs are the validator's job
    if problems:
        return None
    try:
        return Network(tuple(comps), tuple(arcs))
    except ValueError as e:
        problems.append(str(e))
        return None


def _parse_cluster_weights(doc: dict, problems: list[str]):
    raw = doc.get("cluster_weights")
    if raw is None:
        return None
    if not isinstance(raw, dict):
        problems.append("cluster_weights must map target components to source weights")
        return None
    out: dict[str, dict[str, float]] = {}
    for target, sources in raw.items():
        if not isinstance(sources, dict):
            problems.append(f"cluster_weights[{target!r}] must be an object")
            continue
        clean: dict[str, float] = {}
        for src, w in sources.items():
            if not isinstance(w, (int, float)) or isinstance(w, bool) or w < 0:
                problems.append(
                    f"cluster_weights[{target!r}][{src!r}] must be a nonnegative number"
                )
                continue
            clean[src] = float(w)
        out[target] = clean
    return out


def parse_model(doc) -> Model:
    """Parse a model document (dict or JSON text) into a Model.

    Raises ParseError carrying the list of everything wrong rather than
    stopping at the first problem.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise ParseError([f"not valid JSON: {e}"]) from None
    if not isinstance(doc, dict):
        raise ParseError(["model document must be a JSON object"])
    problems: list[str] = []
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(
            [f"unsupported format_version {version!r}; this build reads version {FORMAT_VERSION}"]
        )
    kind = doc.get("kind")
    if kind not in (HIERARCHY, NETWORK):
        raise ParseError([f"kind must be {HIERARCHY!r} or {NETWORK!r}, got {kind!r}"])
    mode, rho, cr_threshold = _get_settings(doc, problems)
    judgments = tuple(_get_judgments(doc, problems))
    cluster_weights = None
    if kind == HIERARCHY:
        structure = _parse_hierarchy(doc, problems)
    else:
        structure = _parse_network(doc, problems)
        cluster_weights = _parse_cluster_weights(doc, problems)
    if problems or structure is None:
        raise ParseError(problems or ["document does not describe a structure"])
    return Model(kind, structure, mode, rho, cr_threshold, judgments, cluster_weights)


def dump_model(model: Model) -> dict:
    """Serialize a Model back to a document dict; inverse of parse_model."""
    doc: dict = {
        "format_version": FORMAT_VERSION,
        "kind": model.kind,
        "mode": model.mode,
        "rho": model.rho,
        "cr_threshold": model.cr_threshold,
    }
    s = model.structure
    if model.kind == HIERARCHY:
        doc["nodes"] = [
            {"id": n.id, "kind": n.kind, "level": n.level} for n in s.nodes
        ]
        doc["edges"] = [[p, c] for p, c in s.edges]
    else:
        doc["components"] = [
            {"id": c.id, "elements": list(c.elements)} for c in s.components
        ]
        doc["arcs"] = [[a, b] for a, b in s.arcs]
        if model.cluster_weights:
            doc["cluster_weights"] = {
                t: dict(sources) for t, sources in model.cluster_weights.items()
            }
    doc["judgments"] = [
        {"context": j.context, "pair": [j.row, j.col], "value": j.value}
        for j in model.judgments
    ]
    return doc


def dumps_model(model: Model) -> str:
    return json.dumps(dump_model(model), indent=2)


def load_model_file(path) -> Model:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ParseError([f"cannot read {path}: {e}"]) from None
    return parse_model(text)
