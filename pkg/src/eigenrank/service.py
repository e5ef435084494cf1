"""HTTP service over elicitation sessions.

Endpoints:
  POST /sessions                          create from a model document
  GET  /sessions/{id}                     current snapshot
  PUT  /sessions/{id}/judgments/{context} store {"pair": [row, col], "value": v}
  POST /sessions/{id}/what-if             {"action": ..., ...payload}
  GET  /sessions/{id}/export              full model + judgments document
  GET  /healthz                           liveness
  /ui                                     static elicitation UI, when built

Configuration comes from flags (see the serve command) or environment:
EIGENRANK_HOST, EIGENRANK_PORT, EIGENRANK_DATA_DIR, EIGENRANK_CR_THRESHOLD,
EIGENRANK_UI_DIR.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .errors import (
    EigenrankError,
    InvalidAction,
    NoConvergence,
    NonPositiveValue,
    ParseError,
    UnknownContext,
    UnknownPair,
    UnknownSession,
    ValidationFailed,
)
from .session import SessionStore

ENV_HOST = "EIGENRANK_HOST"
ENV_PORT = "EIGENRANK_PORT"
ENV_DATA_DIR = "EIGENRANK_DATA_DIR"
ENV_CR_THRESHOLD = "EIGENRANK_CR_THRESHOLD"
ENV_UI_DIR = "EIGENRANK_UI_DIR"

_NOT_FOUND = (UnknownSession, UnknownContext, UnknownPair)
_BAD_REQUEST = (NonPositiveValue, InvalidAction)
_UNPROCESSABLE = (NoConvergence,)


def _error_body(exc: EigenrankError) -> dict:
    body: dict = {"error": type(exc).__name__, "detail": str(exc)}
    if isinstance(exc, ParseError):
        body["problems"] = list(exc.problems)
    if isinstance(exc, ValidationFailed):
        body["issues"] = [
            {
                "code": i.code,
                "severity": i.severity,
                "subjects": list(i.subjects),
                "message": i.message,
            }
            for i in exc.report.issues
        ]
    return body


def create_app(
    store: SessionStore | None = None,
    data_dir: str | None = None,
    ui_dir: str | None = None,
    cr_threshold_default: float | None = None,
) -> FastAPI:
    """Build the service; pass a store for tests, or a data_dir to persist."""
    if store is None:
        if cr_threshold_default is None:
            raw = os.environ.get(ENV_CR_THRESHOLD)
            cr_threshold_default = float(raw) if raw else None
        store = SessionStore(
            data_dir or os.environ.get(ENV_DATA_DIR) or None,
            cr_threshold_default=cr_threshold_default,
        )
    app = FastAPI(title="eigenrank", docs_url=None, redoc_url=None)
    app.state.store = store

    @app.exception_handler(EigenrankError)
    async def on_domain_error(request: Request, exc: EigenrankError):
        if isinstance(exc, _NOT_FOUND):
            status = 404
        elif isinstance(exc, (ParseError, ValidationFailed) + _BAD_REQUEST):
            status = 400
        elif isinstance(exc, _UNPROCESSABLE):
            status = 422
        else:
            status = 500
        return JSONResponse(status_code=status, content=_error_body(exc))

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "sessions": len(store.ids())}

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request):
        document = await request.json()
        session = store.create(document)
        return {"id": session.id, "snapshot": store.snapshot(session.id)}

    @app.get("/sessions/{session_id}")
    def get_snapshot(session_id: str):
        return store.snapshot(session_id)

    @app.put("/sessions/{session_id}/judgments/{context_id}")
    async def put_judgment(session_id: str, context_id: str, request: Request):
        body = await request.json()
        pair = body.get("pair")
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(p, str) for p in pair)
        ):
            raise UnknownPair("body must carry a pair of element ids")
        value = body.get("value")
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise NonPositiveValue(f"value must be a positive number, got {value!r}")
        return store.put_judgment(session_id, context_id, pair[0], pair[1], float(value))

    @app.post("/sessions/{session_id}/what-if")
    async def what_if(session_id: str, request: Request):
        body = await request.json()
        action = body.get("action")
        if not isinstance(action, str):
            raise InvalidAction("body must carry an action name")
        payload = {k: v for k, v in body.items() if k != "action"}
        return store.what_if(session_id, action, payload)

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str):
        return store.export(session_id)

    ui = ui_dir or os.environ.get(ENV_UI_DIR)
    if ui and os.path.isdir(ui):
        app.mount("/ui", StaticFiles(directory=ui, html=True), name="ui")

    return app


def run(
    host: str | None = None,
    port: int | None = None,
    data_dir: str | None = None,
    ui_dir: str | None = None,
):
    """Start the service with uvicorn; flag values beat environment ones."""
    import uvicorn

    host = host or os.environ.get(ENV_HOST, "127.0.0.1")
    port = port or int(os.environ.get(ENV_PORT, "8642"))
    app = create_app(data_dir=data_dir, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")
