"""Elicitation sessions: incremental judgments over a decision structure.

A session wraps one model (hierarchy or network) and accepts judgments
one pair at a time.  Its snapshot is a pure function of (structure,
judgments, mode, rho): per-context completeness, priorities and
consistency, plus global results once everything is complete.  Mutations
append to a per-session event log; replaying the log reproduces the
session bit for bit, so snapshots are always recomputed, never stored.

Context ids: in a hierarchy every node with children is a context (its
children are the elements).  In a network every (source component,
target element) pair backed by an arc is a context, written
"source@target"; single-element sources need no judgments and get no
context.
"""

from __future__ import annotations

import json
import math
import os
import threading
import uuid
from dataclasses import dataclass, field

from .compose import compose
from .errors import (
    InvalidAction,
    NoConvergence,
    NonPositiveValue,
    ParseError,
    UnknownContext,
    UnknownPair,
    UnknownSession,
    ValidationFailed,
)
from .matrix import build_matrix
from .model_io import (
    HIERARCHY,
    NETWORK,
    Model,
    SeededJudgment,
    dump_model,
    parse_model,
)
from .priority import DISTRIBUTIVE, IDEAL, consistency_report, derive_priorities
from .structure import (
    Hierarchy,
    Network,
    Node,
    validate_hierarchy,
    validate_network,
)
from .supermatrix import assemble_supermatrix, limit_supermatrix


@dataclass(frozen=True)
class Context:
    """One comparison group: the elements judged against each other."""

    id: str
    labels: tuple[str, ...]
    # hierarchy: the parent node; network: (source component, target element)
    parent: str | None = None
    source: str | None = None
    target: str | None = None


def contexts_for(model: Model) -> tuple[Context, ...]:
    """Enumerate a model's judgment contexts in canonical order."""
    out = []
    if model.kind == HIERARCHY:
        h: Hierarchy = model.structure
        for node in h.nodes:
            kids = h.children_of(node.id)
            if kids:
                out.append(Context(node.id, kids, parent=node.id))
    else:
        net: Network = model.structure
        known = {c.id for c in net.components}
        for src_id, dst_id in net.arcs:
            if src_id not in known or dst_id not in known:
                continue  # dangling arcs belong to the validation report
            src = net.component(src_id)
            if len(src.elements) < 2:
                continue  # singleton priority is forced, nothing to elicit
            for target_el in net.component(dst_id).elements:
                out.append(
                    Context(
                        f"{src_id}@{target_el}",
                        src.elements,
                        source=src_id,
                        target=target_el,
                    )
                )
    return tuple(out)


def _pair_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


class Session:
    """Mutable session state; snapshots are derived, never stored."""

    def __init__(self, session_id: str, model: Model):
        self.id = session_id
        self.model = model
        self.revision = 0
        self.contexts = contexts_for(model)
        self._by_id = {c.id: c for c in self.contexts}
        # context id -> {unordered pair -> (row, col, value) as entered}
        self.judgments: dict[str, dict[tuple[str, str], tuple[str, str, float]]] = {
            c.id: {} for c in self.contexts
        }
        self._cache_versions: dict[str, int] = {c.id: 0 for c in self.contexts}
        self._context_cache: dict[str, tuple[int, dict]] = {}

    # -- mutations ---------------------------------------------------------

    def seed(self, seeds: tuple[SeededJudgment, ...]):
        """Apply document-seeded judgments; problems raise ParseError."""
        problems = []
        for s in seeds:
            try:
                self._store(s.context, s.row, s.col, s.value)
            except (UnknownContext, UnknownPair, NonPositiveValue) as e:
                problems.append(f"seeded judgment ({s.context}, {s.row}, {s.col}): {e}")
        if problems:
            raise ParseError(problems)

    def put_judgment(self, context_id: str, row: str, col: str, value: float):
        """Store one judgment and bump the revision."""
        self._store(context_id, row, col, value)
        self.revision += 1

    def _store(self, context_id: str, row: str, col: str, value: float):
        ctx = self._by_id.get(context_id)
        if ctx is None:
            raise UnknownContext(f"unknown context {context_id!r}")
        if row not in ctx.labels or col not in ctx.labels:
            raise UnknownPair(
                f"pair ({row!r}, {col!r}) is not drawn from context {context_id!r}"
            )
        if row == col:
            raise UnknownPair(f"cannot judge {row!r} against itself")
        value = float(value)
        if not math.isfinite(value) or value <= 0.0:
            raise NonPositiveValue(f"judgment values must be positive, got {value!r}")
        self.judgments[context_id][_pair_key(row, col)] = (row, col, value)
        self._cache_versions[context_id] += 1

    # -- derived state -----------------------------------------------------

    def context_matrix(self, ctx: Context):
        """The comparison matrix of a complete context, else None."""
        stored = self.judgments[ctx.id]
        n = len(ctx.labels)
        if len(stored) < n * (n - 1) // 2:
            return None
        return build_matrix(ctx.labels, list(stored.values()))

    def snapshot(self) -> dict:
        return compute_snapshot(self)

    def export_model(self) -> Model:
        """Current state as a model document (structure + all judgments)."""
        seeds = []
        for ctx in self.contexts:
            for key in sorted(self.judgments[ctx.id]):
                row, col, value = self.judgments[ctx.id][key]
                seeds.append(SeededJudgment(ctx.id, row, col, value))
        return Model(
            self.model.kind,
            self.model.structure,
            self.model.mode,
            self.model.rho,
            self.model.cr_threshold,
            tuple(seeds),
            self.model.cluster_weights,
        )


# -- snapshot computation ---------------------------------------------------


def _context_result(session: Session, ctx: Context, rho: float, mode: str,
                    cr_threshold: float) -> dict:
    stored = session.judgments[ctx.id]
    n = len(ctx.labels)
    required = n * (n - 1) // 2
    provided_pairs = set(stored.keys())
    missing = [
        [a, b]
        for i, a in enumerate(ctx.labels)
        for b in ctx.labels[i + 1 :]
        if _pair_key(a, b) not in provided_pairs
    ]
    judgments = [
        {
            "pair": [row, col],
            "value": value,
            "reciprocal": _mirror_value(session, ctx, row, col),
        }
        for key in sorted(stored)
        for row, col, value in [stored[key]]
    ]
    homogeneity = [
        [row, col]
        for key in sorted(stored)
        for row, col, value in [stored[key]]
        if value > rho or value < 1.0 / rho
    ]
    out = {
        "labels": list(ctx.labels),
        "required": required,
        "provided": len(stored),
        "missing_pairs": missing,
        "complete": not missing,
        "judgments": judgments,
        "homogeneity_violations": homogeneity,
        "priorities": None,
        "consistency": None,
    }
    if missing:
        return out
    m = build_matrix(ctx.labels, list(stored.values()))
    try:
        pv = derive_priorities(m, mode=mode)
    except NoConvergence as e:
        out["error"] = str(e)
        return out
    rep = consistency_report(m, derive_priorities(m))
    exceeded = rep.cr > cr_threshold
    suggestion = None
    if exceeded and rep.worst_entry is not None:
        i, j = rep.worst_entry
        dist = derive_priorities(m)
        suggestion = {
            "pair": [m.labels[i], m.labels[j]],
            "current": float(m.values[i, j]),
            "consistent_value": float(dist.weights[i] / dist.weights[j]),
        }
    out["priorities"] = {lab: float(w) for lab, w in zip(pv.labels, pv.weights)}
    out["consistency"] = {
        "lambda_max": rep.lambda_max,
        "ci": rep.ci,
        "ri": rep.ri,
        "cr": rep.cr,
        "consistent": rep.consistent,
        "worst_entry": None
        if rep.worst_entry is None
        else [m.labels[rep.worst_entry[0]], m.labels[rep.worst_entry[1]]],
        "cr_exceeds_threshold": exceeded,
        "suggestion": suggestion,
    }
    return out


def _mirror_value(session: Session, ctx: Context, row: str, col: str) -> float:
    """The reciprocal the matrix will hold opposite an entered judgment."""
    _, _, value = session.judgments[ctx.id][_pair_key(row, col)]
    return 1.0 / value


def _cached_context_result(session: Session, ctx: Context, rho: float, mode: str,
                           cr_threshold: float) -> dict:
    version = (
        session._cache_versions[ctx.id],
        rho,
        mode,
        cr_threshold,
    )
    hit = session._context_cache.get(ctx.id)
    if hit is not None and hit[0] == version:
        return hit[1]
    result = _context_result(session, ctx, rho, mode, cr_threshold)
    session._context_cache[ctx.id] = (version, result)
    return result


def compute_snapshot(
    session: Session,
    mode: str | None = None,
    rho: float | None = None,
    use_cache: bool = True,
) -> dict:
    """The full result snapshot; pure in (structure, judgments, mode, rho)."""
    model = session.model
    mode = model.mode if mode is None else mode
    rho = model.rho if rho is None else rho
    if model.kind == HIERARCHY:
        report = validate_hierarchy(model.structure)
    else:
        report = validate_network(model.structure)
    snap: dict = {
        "revision": session.revision,
        "kind": model.kind,
        "mode": mode,
        "rho": rho,
        "cr_threshold": model.cr_threshold,
        "validation": {
            "ok": report.ok,
            "issues": [
                {
                    "code": i.code,
                    "severity": i.severity,
                    "subjects": list(i.subjects),
                    "message": i.message,
                }
                for i in report.issues
            ],
        },
        "contexts": {},
        "global": None,
        "limit": None,
        "errors": [],
    }
    default_settings = mode == model.mode and rho == model.rho
    for ctx in session.contexts:
        if use_cache and default_settings:
            result = _cached_context_result(session, ctx, rho, mode, model.cr_threshold)
        else:
            result = _context_result(session, ctx, rho, mode, model.cr_threshold)
        snap["contexts"][ctx.id] = result
    all_complete = all(c["complete"] for c in snap["contexts"].values())
    if not (all_complete and report.ok):
        return snap
    matrices = {
        ctx.id: session.context_matrix(ctx)
        for ctx in session.contexts
    }
    try:
        if model.kind == HIERARCHY:
            gp = compose(model.structure, matrices, mode=mode)
            snap["global"] = {
                "per_level": [
                    {"labels": list(v.labels), "weights": [float(w) for w in v.weights]}
                    for v in gp.per_level
                ],
                "final": gp.final.as_dict(),
                "ranking": gp.final.ranking(),
            }
        else:
            block_matrices = {
                (ctx.target, ctx.source): matrices[ctx.id]
                for ctx in session.contexts
            }
            res = limit_supermatrix(
                assemble_supermatrix(
                    model.structure, block_matrices, model.cluster_weights
                )
            )
            priorities = res.final_priorities
            if mode == IDEAL and priorities.weights.max() > 0:
                rescaled = priorities.weights / priorities.weights.max()
                final = {lab: float(w) for lab, w in zip(priorities.labels, rescaled)}
            else:
                final = priorities.as_dict()
            snap["limit"] = {
                "method": res.method,
                "steps": res.steps,
                "priorities": final,
                "ranking": priorities.ranking(),
                "columns_agree": res.columns_agree,
            }
    except NoConvergence as e:
        snap["errors"].append(f"no convergence: {e}")
    except Exception as e:  # assembly problems surface as notes, not crashes
        snap["errors"].append(str(e))
    return snap


# -- what-if ----------------------------------------------------------------

WHAT_IF_ACTIONS = ("add_alternative", "remove_alternative", "set_mode", "set_rho")


def _hypothetical_session(session: Session, action: str, payload: dict) -> tuple[Session, str, float]:
    model = session.model
    mode, rho = model.mode, model.rho
    if action == "set_mode":
        mode = payload.get("mode")
        if mode not in (DISTRIBUTIVE, IDEAL):
            raise InvalidAction(f"set_mode needs mode of {DISTRIBUTIVE!r} or {IDEAL!r}")
        return session, mode, rho
    if action == "set_rho":
        rho = payload.get("rho")
        if not isinstance(rho, (int, float)) or isinstance(rho, bool) or rho < 1:
            raise InvalidAction("set_rho needs a numeric rho >= 1")
        return session, mode, float(rho)
    if model.kind != HIERARCHY:
        raise InvalidAction(f"{action} applies only to hierarchy sessions")
    h: Hierarchy = model.structure
    if action == "add_alternative":
        new_id = payload.get("id")
        parents = payload.get("parents")
        if not isinstance(new_id, str) or not new_id:
            raise InvalidAction("add_alternative needs a nonempty string id")
        if any(n.id == new_id for n in h.nodes):
            raise InvalidAction(f"node {new_id!r} already exists")
        if not isinstance(parents, list) or not parents:
            raise InvalidAction("add_alternative needs a nonempty parents list")
        depth = h.depth()
        for p in parents:
            if not any(n.id == p and n.level == depth - 1 for n in h.nodes):
                raise InvalidAction(
                    f"parent {p!r} is not a level {depth - 1} node"
                )
        nodes = h.nodes + (Node(new_id, "alternative", depth),)
        edges = h.edges + tuple((p, new_id) for p in parents)
        h2 = Hierarchy(nodes, edges, rho=h.rho)
        model2 = Model(
            model.kind, h2, model.mode, model.rho, model.cr_threshold
        )
        hypo = Session(session.id, model2)
        for ctx in session.contexts:
            for row, col, value in session.judgments[ctx.id].values():
                hypo._store(ctx.id, row, col, value)
        new_judgments = payload.get("judgments", {})
        if not isinstance(new_judgments, dict):
            raise InvalidAction("judgments must map parent ids to {other: value}")
        for parent, given in new_judgments.items():
            if parent not in parents or not isinstance(given, dict):
                raise InvalidAction(
                    f"judgments[{parent!r}] must name a parent of {new_id!r}"
                )
            for other, value in given.items():
                try:
                    hypo._store(parent, new_id, other, value)
                except (UnknownContext, UnknownPair, NonPositiveValue) as e:
                    raise InvalidAction(str(e)) from None
        return hypo, mode, rho
    if action == "remove_alternative":
        gone = payload.get("id")
        depth = h.depth()
        target = next((n for n in h.nodes if n.id == gone), None)
        if target is None or target.level != depth:
            raise InvalidAction(f"{gone!r} is not an alternative in this hierarchy")
        nodes = tuple(n for n in h.nodes if n.id != gone)
        edges = tuple(e for e in h.edges if gone not in e)
        h2 = Hierarchy(nodes, edges, rho=h.rho)
        model2 = Model(model.kind, h2, model.mode, model.rho, model.cr_threshold)
        hypo = Session(session.id, model2)
        for ctx in hypo.contexts:
            for (row, col, value) in session.judgments.get(ctx.id, {}).values():
                if gone not in (row, col):
                    hypo._store(ctx.id, row, col, value)
        return hypo, mode, rho
    raise InvalidAction(
        f"unknown action {action!r}; expected one of {list(WHAT_IF_ACTIONS)}"
    )


def _final_weights(snap: dict) -> dict[str, float] | None:
    if snap.get("global"):
        return snap["global"]["final"]
    if snap.get("limit"):
        return snap["limit"]["priorities"]
    return None


def _rank_changes(current: dict, hypothetical: dict, alternatives) -> dict:
    cur, hyp = _final_weights(current), _final_weights(hypothetical)
    if cur is None or hyp is None:
        return {"comparable": False, "changed": None, "reversed_pairs": []}
    common = [a for a in alternatives if a in cur and a in hyp]
    flips = []
    for i, x in enumerate(common):
        for y in common[i + 1 :]:
            before, after = cur[x] - cur[y], hyp[x] - hyp[y]
            if (before > 0 and after < 0) or (before < 0 and after > 0):
                flips.append([x, y])
    order_before = sorted(common, key=lambda a: (-cur[a], a))
    order_after = sorted(common, key=lambda a: (-hyp[a], a))
    return {
        "comparable": True,
        "changed": order_before != order_after,
        "reversed_pairs": flips,
    }


def what_if(session: Session, action: str, payload: dict | None = None) -> dict:
    """Snapshot of a hypothetical session; stored state is untouched."""
    payload = payload or {}
    hypo, mode, rho = _hypothetical_session(session, action, payload)
    use_cache = hypo is session
    hypothetical = compute_snapshot(hypo, mode=mode, rho=rho, use_cache=use_cache)
    current = session.snapshot()
    if session.model.kind == HIERARCHY:
        alternatives = session.model.structure.levels()[session.model.structure.depth()]
    else:
        alternatives = session.model.structure.element_order()
    return {
        "action": action,
        "snapshot": hypothetical,
        "rank_changes": _rank_changes(current, hypothetical, alternatives),
    }


# -- persistence ------------------------------------------------------------


class SessionStore:
    """Sessions persisted as per-session append-only event logs.

    Every accepted mutation appends one JSON line; loading replays the
    log through the same code paths that handled the original requests,
    so a restart reproduces revisions and snapshots exactly.
    """

    def __init__(self, data_dir: str | None = None,
                 cr_threshold_default: float | None = None):
        self.data_dir = data_dir
        self.cr_threshold_default = cr_threshold_default
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        if data_dir:
            os.makedirs(data_dir, exist_ok=True)
            for name in sorted(os.listdir(data_dir)):
                if name.endswith(".jsonl"):
                    self._replay(os.path.join(data_dir, name))

    # -- log plumbing --

    def _log_path(self, session_id: str) -> str | None:
        if not self.data_dir:
            return None
        return os.path.join(self.data_dir, f"{session_id}.jsonl")

    def _append(self, session_id: str, event: dict):
        path = self._log_path(session_id)
        if not path:
            return
        with open(path, "a", encoding="utf-8") as f:
            f.write(json.dumps(event) + "\n")
            f.flush()
            os.fsync(f.fileno())

    def _replay(self, path: str):
        with open(path, "r", encoding="utf-8") as f:
            lines = [line for line in f.read().splitlines() if line.strip()]
        if not lines:
            return
        session = None
        for line in lines:
            event = json.loads(line)
            if event["event"] == "create":
                model = parse_model(event["document"])
                session = Session(event["session"], model)
                session.seed(model.judgments)
            elif event["event"] == "judgment" and session is not None:
                session.put_judgment(
                    event["context"], event["row"], event["col"], event["value"]
                )
        if session is not None:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()

    # -- public API --

    def create(self, document) -> Session:
        """Parse, validate, persist, and register a new session."""
        if self.cr_threshold_default is not None:
            if isinstance(document, (str, bytes)):
                try:
                    document = json.loads(document)
                except json.JSONDecodeError as e:
                    raise ParseError([f"not valid JSON: {e}"]) from None
            if isinstance(document, dict) and "cr_threshold" not in document:
                document = {**document, "cr_threshold": self.cr_threshold_default}
        model = parse_model(document)
        if model.kind == HIERARCHY:
            report = validate_hierarchy(model.structure)
        else:
            report = validate_network(model.structure)
        if not report.ok:
            raise ValidationFailed(report)
        session_id = uuid.uuid4().hex[:12]
        session = Session(session_id, model)
        session.seed(model.judgments)
        self._append(session_id, {
            "event": "create",
            "session": session_id,
            "document": dump_model(model),
        })
        with self._registry_lock:
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
        return session

    def get(self, session_id: str) -> Session:
        session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSession(f"unknown session {session_id!r}")
        return session

    def lock(self, session_id: str) -> threading.Lock:
        lock = self._locks.get(session_id)
        if lock is None:
            raise UnknownSession(f"unknown session {session_id!r}")
        return lock

    def put_judgment(self, session_id: str, context_id: str, row: str, col: str,
                     value: float) -> dict:
        session = self.get(session_id)
        with self.lock(session_id):
            session.put_judgment(context_id, row, col, value)
            self._append(session_id, {
                "event": "judgment",
                "context": context_id,
                "row": row,
                "col": col,
                "value": float(value),
            })
            return session.snapshot()

    def snapshot(self, session_id: str) -> dict:
        session = self.get(session_id)
        with self.lock(session_id):
            return session.snapshot()

    def what_if(self, session_id: str, action: str, payload: dict | None = None) -> dict:
        session = self.get(session_id)
        with self.lock(session_id):
            return what_if(session, action, payload)

    def export(self, session_id: str) -> dict:
        session = self.get(session_id)
        with self.lock(session_id):
            return dump_model(session.export_model())

    def ids(self) -> list[str]:
        return sorted(self._sessions)
