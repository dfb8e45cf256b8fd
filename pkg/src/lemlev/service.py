"""Stateless HTTP facade over the annotation engine.

Documents never live on the server: text travels in each request and any
persistent overrides ride along inside it as `#i#` runs. All loaded
resources are immutable, so concurrent requests share them freely and any
request order gives identical per-request responses.
"""
from __future__ import annotations

import json
from contextlib import asynccontextmanager

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .analyzer import analyze, most_likely
from .markup import MarkupMode, apply_mode, assign_level, mode_span_styles
from .readability import level_of
from .report import annotate_document, emit_json, stats
from .resources import Resources, ServiceConfig, load_resources
from .suggest import Relation, related
from .textproc import word_body

MAX_BODY_BYTES = 1 << 20  # 413 above this


def _resources(request: Request) -> Resources:
    res = request.app.state.resources
    if res is None:
        raise HTTPException(status_code=503, detail="resources not loaded")
    return res


async def _json_body(request: Request) -> dict:
    raw = await request.body()
    if len(raw) > MAX_BODY_BYTES:
        raise HTTPException(status_code=413, detail="body exceeds 1 MiB limit")
    try:
        obj = json.loads(raw)
    except (UnicodeDecodeError, json.JSONDecodeError):
        raise HTTPException(status_code=400, detail="body is not valid JSON")
    if not isinstance(obj, dict):
        raise HTTPException(status_code=400, detail="body must be a JSON object")
    return obj


def _require_text(obj: dict) -> str:
    text = obj.get("text")
    if not isinstance(text, str):
        raise HTTPException(status_code=400, detail='missing "text" string field')
    return text


def create_app(
    config: ServiceConfig | None = None,
    resources: Resources | None = None,
) -> FastAPI:
    """Build the app; resources load at startup unless passed preloaded."""
    config = config or ServiceConfig()

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        if app.state.resources is None:
            app.state.resources = load_resources(config.resource_dir)
        yield

    app = FastAPI(title="lemlev", lifespan=lifespan)
    app.state.resources = resources
    app.state.config = config
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/v1/analyze")
    async def analyze_endpoint(request: Request) -> Response:
        res = _resources(request)
        text = _require_text(await _json_body(request))
        doc = annotate_document(text, res.db, res.freq, res.lex, config.profile)
        # Same emitter the CLI uses, returned verbatim for byte parity.
        return Response(
            content=emit_json(doc, stats(doc.annotations)),
            media_type="application/json",
        )

    @app.get("/v1/word/{surface}")
    async def word_endpoint(surface: str, request: Request) -> dict:
        res = _resources(request)
        if not surface.strip():
            raise HTTPException(status_code=400, detail="empty surface")
        analyses = analyze(word_body(surface), res.db, config.profile)
        by_level: dict = {}
        for a in analyses:
            by_level.setdefault(level_of(a, res.lex), []).append(a)
        groups = []
        for level in sorted(by_level, key=lambda lv: lv.sort_key):
            entries = sorted(by_level[level], key=lambda a: (a.lemma, a.pos, a.diac))
            groups.append(
                {
                    "level": level.token,
                    "analyses": [
                        {"lemma": a.lemma, "pos": a.pos, "diac": a.diac, "gloss": a.gloss}
                        for a in entries
                    ],
                }
            )
        chosen = most_likely(analyses, res.freq)
        suggestions: dict = {rel.value: [] for rel in Relation}
        if chosen is not None:
            suggestions = {
                rel.value: [
                    {"lemma": s.lemma, "pos": s.pos, "level": s.level.token}
                    for s in items
                ]
                for rel, items in related(
                    chosen.lemma, chosen.pos, res.relations, res.lex
                ).items()
            }
        return {
            "surface": surface,
            "n_analyses": len(analyses),
            "groups": groups,
            "suggestions": suggestions,
        }

    @app.post("/v1/markup")
    async def markup_endpoint(request: Request) -> dict:
        res = _resources(request)
        obj = await _json_body(request)
        text = _require_text(obj)
        try:
            mode = MarkupMode(obj.get("mode"))
        except ValueError:
            raise HTTPException(status_code=400, detail="unknown markup mode")
        doc = annotate_document(text, res.db, res.freq, res.lex, config.profile)
        out = apply_mode(text, mode, doc.annotations)
        payload: dict = {"text": out}
        if mode in (MarkupMode.MINIMIZE, MarkupMode.HIDE):
            payload["spans"] = [
                {
                    "start": span.start,
                    "end": span.end,
                    "level": span.level,
                    "style": span.style.value,
                    "text": span.text,
                }
                for span in mode_span_styles(out, mode)
            ]
        return payload

    @app.post("/v1/assign")
    async def assign_endpoint(request: Request) -> dict:
        _resources(request)
        obj = await _json_body(request)
        text = _require_text(obj)
        level = obj.get("level")
        if not isinstance(level, int) or isinstance(level, bool) or not 1 <= level <= 5:
            raise HTTPException(status_code=400, detail="level must be an integer 1..5")
        target = obj.get("target")
        if not isinstance(target, dict):
            raise HTTPException(status_code=400, detail='missing "target" object')
        if "occurrence_index" in target:
            occ = target["occurrence_index"]
            if not isinstance(occ, int) or isinstance(occ, bool) or occ < 0:
                raise HTTPException(
                    status_code=400, detail="occurrence_index must be a non-negative integer"
                )
            try:
                out = assign_level(text, level, occurrence=occ, profile=config.profile)
            except IndexError:
                raise HTTPException(status_code=404, detail="occurrence_index out of range")
        elif target.get("all") is True and isinstance(target.get("surface"), str):
            out = assign_level(text, level, surface=target["surface"], profile=config.profile)
        else:
            raise HTTPException(
                status_code=400,
                detail='target needs "occurrence_index" or {"surface", "all": true}',
            )
        return {"text": out}

    @app.get("/v1/health")
    async def health_endpoint(request: Request):
        res = request.app.state.resources
        if res is None:
            return Response(
                content=json.dumps({"status": "loading"}),
                status_code=503,
                media_type="application/json",
            )
        return {
            "status": "ok",
            "resources": res.counts(),
            "palette": config.full_palette(),
            "profile": config.profile_name,
        }

    return app


def run(config: ServiceConfig, resources: Resources | None = None) -> None:
    """Serve until interrupted. Blocks."""
    import uvicorn

    app = create_app(config, resources)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
