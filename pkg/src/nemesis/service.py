"""HTTP JSON API exposing live game sessions for the browser UI and tests.

Sessions are held in memory; per-session mutations are serialized by a
non-blocking lock, so concurrent posts to one session get 409 instead of a
corrupted state.  The engine replies synchronously within its node budget.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .exact import SearchConfig, cat_move_values, solve_from_state
from .graph import Instance, InstanceError, Variant, instance_digest, parse_instance, validate
from .rules import (
    GameState,
    IllegalMove,
    Move,
    Phase,
    apply_move,
    game_status,
    initial_state,
    legal_moves,
    move_from_json,
    move_to_json,
    transcript_to_json,
)
from .strategies import engine_move


@dataclass
class Session:
    id: str
    state: GameState
    human_role: str  # "fugitive" | "adversary"
    budget: int
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)
    logged: bool = False


def _engine_phase(session: Session) -> Phase:
    return Phase.ADVERSARY if session.human_role == "fugitive" else Phase.FUGITIVE


def state_view(session: Session, engine_reply: Move | None = None) -> dict:
    state = session.state
    g = state.instance.graph
    status = game_status(state)
    view = {
        "id": session.id,
        "variant": state.instance.variant.value,
        "name": state.instance.name,
        "human_role": session.human_role,
        "position": state.position,
        "phase": state.phase.value,
        "round": state.round,
        "status": {"kind": status.kind, "round": status.round},
        "vertices": [
            {"id": v, "kind": g.vertices[v].value} for v in g.sorted_vertices()
        ],
        "edges": [
            {
                "u": u,
                "v": v,
                "remaining": state.remaining[i],
                "initial": g.edges[(u, v)],
            }
            for i, (u, v) in enumerate(g.edge_list())
        ],
        "visited": sorted(state.visited),
        "legal_moves": [move_to_json(m) for m in legal_moves(state)],
        "history": [move_to_json(m) for m in state.history],
        "layout": {v: list(xy) for v, xy in (state.instance.layout or {}).items()} or None,
        "instance_digest": instance_digest(state.instance),
    }
    if engine_reply is not None:
        view["engine_move"] = move_to_json(engine_reply)
    return view


class SessionStore:
    def __init__(self, budget: int, transcripts: str | None = None):
        self.sessions: dict[str, Session] = {}
        self.budget = budget
        self.transcripts = transcripts
        self._registry_lock = threading.Lock()

    def create(self, inst: Instance, role: str, budget: int | None) -> Session:
        session = Session(
            id=uuid.uuid4().hex[:12],
            state=initial_state(inst),
            human_role=role,
            budget=budget or self.budget,
        )
        with self._registry_lock:
            self.sessions[session.id] = session
        return session

    def get(self, sid: str) -> Optional[Session]:
        return self.sessions.get(sid)

    def drop(self, sid: str) -> bool:
        with self._registry_lock:
            return self.sessions.pop(sid, None) is not None

    def log_if_finished(self, session: Session) -> None:
        if not self.transcripts or session.logged:
            return
        status = game_status(session.state)
        if status.ongoing:
            return
        session.logged = True
        payload = transcript_to_json(session.state.instance, session.state.history, status)
        payload["session"] = session.id
        with self._registry_lock:
            with open(self.transcripts, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(payload, sort_keys=True) + "\n")


def _advance_engine(session: Session) -> list[Move]:
    """Let the engine move while the game is ongoing and it is its phase."""
    replies: list[Move] = []
    cfg = SearchConfig(node_budget=session.budget)
    while game_status(session.state).ongoing and session.state.phase is _engine_phase(session):
        move = engine_move(session.state, cfg)
        if move is None:
            break
        session.state = apply_move(session.state, move)
        replies.append(move)
    return replies


def create_app(
    budget: int = 200_000,
    ui_dir: str | None = None,
    transcripts: str | None = None,
) -> FastAPI:
    app = FastAPI(title="nemesis game service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(budget, transcripts)
    app.state.store = store

    @app.post("/games")
    async def create_game(request: Request) -> Response:
        try:
            body = await request.json()
        except Exception:
            return JSONResponse({"error": "body must be JSON"}, status_code=400)
        if not isinstance(body, dict) or "instance" not in body:
            return JSONResponse({"error": "missing 'instance'"}, status_code=400)
        role = body.get("role", "fugitive")
        if role not in ("fugitive", "adversary"):
            return JSONResponse({"error": "role must be fugitive or adversary"}, status_code=400)
        try:
            inst = parse_instance(json.dumps(body["instance"]))
            inst, _ = validate(inst)
        except InstanceError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        req_budget = body.get("budget")
        if req_budget is not None and (not isinstance(req_budget, int) or req_budget < 1):
            return JSONResponse({"error": "budget must be a positive integer"}, status_code=400)
        session = store.create(inst, role, req_budget)
        with session.lock:
            replies = _advance_engine(session)
            store.log_if_finished(session)
            view = state_view(session, replies[-1] if replies else None)
        return JSONResponse(view, status_code=201)

    @app.get("/games/{sid}")
    async def get_game(sid: str) -> Response:
        session = store.get(sid)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        with session.lock:
            return JSONResponse(state_view(session))

    @app.post("/games/{sid}/moves")
    async def post_move(sid: str, request: Request) -> Response:
        session = store.get(sid)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        try:
            body = await request.json()
        except Exception:
            return JSONResponse({"error": "body must be JSON"}, status_code=400)
        move_obj = body.get("move", body) if isinstance(body, dict) else None
        try:
            move = move_from_json(move_obj)
        except (ValueError, KeyError, TypeError, AttributeError):
            return JSONResponse({"error": "unparseable move"}, status_code=400)
        if not session.lock.acquire(blocking=False):
            return JSONResponse({"error": "session busy, retry"}, status_code=409)
        try:
            state = session.state
            if not game_status(state).ongoing:
                return JSONResponse(
                    {"error": "game is over", "state": state_view(session)}, status_code=409
                )
            if state.phase is _engine_phase(session):
                return JSONResponse(
                    {"error": "not your phase", "state": state_view(session)}, status_code=409
                )
            try:
                session.state = apply_move(state, move)
            except IllegalMove as exc:
                return JSONResponse(
                    {"error": f"illegal move: {exc}", "state": state_view(session)},
                    status_code=409,
                )
            session.updated = time.time()
            replies = _advance_engine(session)
            store.log_if_finished(session)
            return JSONResponse(state_view(session, replies[-1] if replies else None))
        finally:
            session.lock.release()

    @app.get("/games/{sid}/hint")
    async def get_hint(sid: str) -> Response:
        session = store.get(sid)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        with session.lock:
            state = session.state
            cfg = SearchConfig(node_budget=session.budget)
            if state.instance.variant is Variant.CATHERDING:
                values = cat_move_values(state, cfg)
                if values:
                    best = (
                        max(values, key=lambda mv: mv[1])
                        if state.phase is Phase.FUGITIVE
                        else min(values, key=lambda mv: mv[1])
                    )
                    return JSONResponse(
                        {
                            "winner_from_here": None,
                            "value": best[1],
                            "suggested_move": move_to_json(best[0]),
                            "exact": True,
                        }
                    )
                return JSONResponse(
                    {"winner_from_here": None, "value": 0, "suggested_move": None, "exact": True}
                )
            verdict = solve_from_state(state, cfg)
            suggestion = None
            if verdict.exact and verdict.pv:
                suggestion = move_to_json(verdict.pv[0])
            elif game_status(state).ongoing:
                move = engine_move(state, cfg)
                if move is not None:
                    suggestion = move_to_json(move)
            return JSONResponse(
                {
                    "winner_from_here": verdict.winner,
                    "suggested_move": suggestion,
                    "exact": verdict.exact,
                    "nodes": verdict.nodes,
                }
            )

    @app.delete("/games/{sid}")
    async def delete_game(sid: str) -> Response:
        if not store.drop(sid):
            return JSONResponse({"error": "unknown session"}, status_code=404)
        return Response(status_code=204)

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
