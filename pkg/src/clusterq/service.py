"""Local HTTP service for interactive mutation exploration.

Session state is the mutation history over the x-quiver initial seed of a
chosen graph; replaying the history always reproduces the current seed, and
that is literally how state is stored.  Analyses (F-polynomial, g-vector,
matching truncated character) are computed lazily per (history, vertex) and
cached; the what-if endpoint never commits anything.

Endpoints (JSON bodies, OpenAPI served at /api):

    POST /session {graph, parts?}         -> {id, seed}
    GET  /session/{id}                    -> seed + history
    POST /session/{id}/mutate {vertex}    -> committed new seed + diff
    POST /session/{id}/undo               -> seed after dropping the last step
    GET  /session/{id}/variable/{vertex}  -> laurent, F, g, character
    GET  /session/{id}/whatif/{vertex}    -> mutated seed, not committed

Errors: 404 unknown session, 409 frozen-vertex mutation or empty undo,
422 invalid graph.
"""

from __future__ import annotations

import json
import threading
import uuid
from pathlib import Path
from typing import Any, Mapping

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .cluster import Seed, principal_seed
from .graphs import Bipartite, OddCycleError, builtin_graph, graph_from_dict
from .quiver import QuiverError
from .replab import as_rng, child_rng
from .verify import variable_profile


class SessionCreate(BaseModel):
    graph: Any
    parts: list[list[str]] | str | None = None
    coeff: str = "x"  # "x" (frozen f_i row) or "none" (coefficient-free)


class MutateBody(BaseModel):
    vertex: str


class Session:
    def __init__(self, sid: str, graph_spec: Any, parts_spec, rng_seed: int,
                 coeff: str = "x"):
        self.id = sid
        self.graph_spec = graph_spec
        self.parts_spec = parts_spec
        self.coeff = coeff
        self.setting = _build_setting(graph_spec, parts_spec)
        if coeff == "x":
            start = self.setting.x_quiver()
        elif coeff == "none":
            start = self.setting.x_principal()
        else:
            raise HTTPException(status_code=422,
                                detail=f"unknown coeff mode {coeff!r}")
        self.initial = Seed.initial(start)
        self.history: list[str] = []
        self.current = self.initial
        self.lock = threading.Lock()
        self.rng_seed = rng_seed
        self._profiles: dict[tuple[tuple[str, ...], str], dict] = {}
        # principal-coefficient shadow over the shared principal quiver,
        # based at the source-mutated seed: x-seed = z-seed mutated at I1
        self._pr_initial = principal_seed(self.setting.z_principal())
        self._i1_path = sorted(self.setting.i1)

    def seed_payload(self) -> dict:
        seed = self.current
        return {
            "matrix": seed.matrix.to_dict(),
            "variables": {v: str(p) for v, p in seed.variables.items()},
            "pretty": {v: seed.pretty(v) for v in seed.matrix.ids},
            "names": seed.names,
            "frozen": [v for v in seed.matrix.ids if seed.matrix.frozen[v]],
            "mutable": list(seed.matrix.principal),
        }

    def profile(self, vertex: str) -> dict:
        key = (tuple(self.history), vertex)
        if key not in self._profiles:
            pr = self._pr_initial.replay([*self._i1_path, *self.history])
            rng = child_rng(as_rng(self.rng_seed), len(self.history))
            self._profiles[key] = variable_profile(
                self.setting, self._pr_initial, pr.variables[vertex], rng)
        return self._profiles[key]

    def to_snapshot(self) -> dict:
        return {"id": self.id, "graph": self.graph_spec,
                "parts": self.parts_spec, "coeff": self.coeff,
                "history": self.history}


def _build_setting(graph_spec: Any, parts_spec) -> Bipartite:
    try:
        if isinstance(graph_spec, str):
            graph = builtin_graph(graph_spec)
        elif isinstance(graph_spec, Mapping):
            graph = graph_from_dict(graph_spec)
        else:
            raise QuiverError(f"bad graph spec {graph_spec!r}")
        if parts_spec:
            if isinstance(parts_spec, str):
                i0 = [v.strip() for v in parts_spec.split(",") if v.strip()]
            else:
                i0 = [str(v) for v in parts_spec[0]]
            i1 = [v for v in graph.vertices if v not in i0]
            return Bipartite(graph, (i0, i1))
        return Bipartite(graph)
    except (QuiverError, OddCycleError, KeyError, TypeError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def create_app(state_dir: str | None = None, rng_seed: int = 0) -> FastAPI:
    app = FastAPI(title="cluster exploration service", openapi_url="/api")
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()
    state_path = Path(state_dir) if state_dir else None
    if state_path:
        state_path.mkdir(parents=True, exist_ok=True)

    def persist(session: Session) -> None:
        if state_path:
            (state_path / f"{session.id}.json").write_text(
                json.dumps(session.to_snapshot()))

    def load(sid: str) -> Session | None:
        if not state_path:
            return None
        f = state_path / f"{sid}.json"
        if not f.exists():
            return None
        snap = json.loads(f.read_text())
        session = Session(snap["id"], snap["graph"], snap.get("parts"),
                          rng_seed, snap.get("coeff", "x"))
        for k in snap.get("history", []):
            session.current = session.current.mutate(k)
            session.history.append(k)
        return session

    def get_session(sid: str) -> Session:
        with registry_lock:
            session = sessions.get(sid)
            if session is None:
                session = load(sid)
                if session is not None:
                    sessions[sid] = session
        if session is None:
            raise HTTPException(status_code=404, detail=f"no session {sid}")
        return session

    @app.post("/session", status_code=201)
    def create_session(body: SessionCreate):
        sid = uuid.uuid4().hex[:12]
        session = Session(sid, body.graph, body.parts, rng_seed, body.coeff)
        with registry_lock:
            sessions[sid] = session
        persist(session)
        return {"id": sid, "seed": session.seed_payload(),
                "history": session.history}

    @app.get("/session/{sid}")
    def read_session(sid: str):
        session = get_session(sid)
        with session.lock:
            return {"id": sid, "graph": session.graph_spec,
                    "seed": session.seed_payload(),
                    "history": list(session.history)}

    @app.post("/session/{sid}/mutate")
    def mutate(sid: str, body: MutateBody):
        session = get_session(sid)
        with session.lock:
            if body.vertex not in session.current.matrix.principal:
                raise HTTPException(status_code=409,
                                    detail=f"vertex {body.vertex!r} is frozen "
                                           "or unknown")
            session.current = session.current.mutate(body.vertex)
            session.history.append(body.vertex)
            persist(session)
            return {
                "id": sid,
                "seed": session.seed_payload(),
                "history": list(session.history),
                "changed": {
                    "vertex": body.vertex,
                    "variable": str(session.current.variables[body.vertex]),
                    "pretty": session.current.pretty(body.vertex),
                },
            }

    @app.post("/session/{sid}/undo")
    def undo(sid: str):
        session = get_session(sid)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=409, detail="nothing to undo")
            session.history.pop()
            session.current = session.initial.replay(session.history)
            persist(session)
            return {"id": sid, "seed": session.seed_payload(),
                    "history": list(session.history)}

    @app.get("/session/{sid}/variable/{vertex}")
    def variable(sid: str, vertex: str):
        session = get_session(sid)
        with session.lock:
            if vertex not in session.current.matrix.principal:
                raise HTTPException(status_code=409,
                                    detail=f"vertex {vertex!r} is frozen "
                                           "or unknown")
            profile = session.profile(vertex)
            return {
                "vertex": vertex,
                "laurent": str(session.current.variables[vertex]),
                "pretty": session.current.pretty(vertex),
                **profile,
            }

    @app.get("/session/{sid}/whatif/{vertex}")
    def whatif(sid: str, vertex: str):
        session = get_session(sid)
        with session.lock:
            if vertex not in session.current.matrix.principal:
                raise HTTPException(status_code=409,
                                    detail=f"vertex {vertex!r} is frozen "
                                           "or unknown")
            preview = session.current.mutate(vertex)
            return {
                "id": sid,
                "seed": {
                    "matrix": preview.matrix.to_dict(),
                    "variables": {v: str(p) for v, p in preview.variables.items()},
                    "pretty": {v: preview.pretty(v) for v in preview.matrix.ids},
                    "names": preview.names,
                    "frozen": [v for v in preview.matrix.ids
                               if preview.matrix.frozen[v]],
                    "mutable": list(preview.matrix.principal),
                },
                "committed": False,
            }

    return app
