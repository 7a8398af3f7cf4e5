"""HTTP JSON API for the explorer UI.

Polygons are stored as immutable content-addressed snapshots; every response
is a deterministic function of the request.  Geometric refusals surface as
422 with the structured diagnostic, unknown snapshots as 404.
"""

from __future__ import annotations

import hashlib
import threading

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import __version__
from .errors import CposError
from .kernel import Vec
from .polygon import CposPolygon
from .editing import project_vertex
from .scene import FEATURE_ORDER, build_scene, canon_json


class PolygonDoc(BaseModel):
    vertices: list[list[str | int]] = Field(min_length=3)


class SnapshotOut(BaseModel):
    id: str
    n: int
    polygon: dict


class ProjectRequest(BaseModel):
    id: str
    vertex: int
    target: list[str | int] = Field(min_length=2, max_length=2)


class ProjectOut(BaseModel):
    id: str
    polygon: dict
    clamped: bool


class _Store:
    """Append-only snapshot table; ids are content hashes."""

    def __init__(self):
        self._lock = threading.Lock()
        self._by_id: dict[str, CposPolygon] = {}

    def put(self, p: CposPolygon) -> str:
        key = hashlib.sha256(canon_json(p.to_json()).encode()).hexdigest()[:12]
        with self._lock:
            self._by_id.setdefault(key, p)
        return key

    def get(self, key: str) -> CposPolygon:
        with self._lock:
            p = self._by_id.get(key)
        if p is None:
            raise HTTPException(status_code=404, detail={"error": {"kind": "UnknownSnapshot"}})
        return p


def _refuse(exc: CposError):
    raise HTTPException(status_code=422, detail=exc.to_json())


def create_app() -> FastAPI:
    app = FastAPI(title="cpos", version=__version__)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = _Store()
    app.state.store = store

    @app.get("/api/health")
    def health():
        return {"service": "cpos", "version": __version__}

    @app.post("/api/polygon", response_model=SnapshotOut)
    def post_polygon(doc: PolygonDoc):
        try:
            p = CposPolygon.from_json(doc.model_dump())
        except CposError as exc:
            _refuse(exc)
        return {"id": store.put(p), "n": p.n, "polygon": p.to_json()}

    @app.get("/api/scene/{snapshot_id}")
    def get_scene(
        snapshot_id: str,
        features: str = Query(default="ae,css"),
        t: str | None = None,
        level: str | None = None,
        mu: str | None = None,
        at: str | None = None,
    ):
        p = store.get(snapshot_id)
        wanted = [f.strip() for f in features.split(",") if f.strip()]
        for f in wanted:
            if f not in FEATURE_ORDER:
                raise HTTPException(
                    status_code=422,
                    detail={"error": {"kind": "UnknownFeature", "feature": f}},
                )
        params: dict = {"t": t, "level": level, "mu": mu}
        if at is not None:
            try:
                x, y = at.split(",")
                params["at"] = Vec.of(x, y)
            except (ValueError, CposError) as exc:
                raise HTTPException(
                    status_code=422, detail={"error": {"kind": "BadParam", "param": "at"}}
                ) from exc
        doc = build_scene(p, wanted, params)
        doc["id"] = snapshot_id
        return doc

    @app.post("/api/project", response_model=ProjectOut)
    def post_project(req: ProjectRequest):
        p = store.get(req.id)
        try:
            target = Vec.from_json(req.target)
            moved, clamped = project_vertex(p, req.vertex, target)
        except CposError as exc:
            _refuse(exc)
        return {"id": store.put(moved), "polygon": moved.to_json(), "clamped": clamped}

    return app


app = create_app()
