"""HTTP service exposing studies, sessions, elements, metrics, and reports.

The participant-facing surface is the closed route set PARTICIPANT_ROUTES;
none of those routes ever returns previously recorded constructs of a live
session (participants must not see their construct history).  Interviewer
and analyst operations live outside that prefix.

State-changing endpoints accept a client-supplied request_id and are
idempotent under retry: a repeated request_id returns the stored response
without re-applying the mutation.  Error responses use a closed code set:

    not_found, session_finished, no_current_triad, invalid_construct,
    unknown_construct, invalid_element, invalid_study, invalid_category,
    mapping_not_allowed, unknown_metric, bad_request
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .analysis import AnalysisWorkspace, render_usage_table
from .catalog import catalog
from .generator import GeneratorParams, generate_element_set
from .metrics import evaluate_all
from .model import Drawing
from .render import render_svg
from .rgt import ParticipantView, RgtError, StudyConfig, create_study, make_element
from .storage import Store

_STATUS = {
    "not_found": 404,
    "unknown_construct": 404,
    "unknown_metric": 404,
    "session_finished": 409,
    "no_current_triad": 409,
    "mapping_not_allowed": 409,
}

INTERVIEW_QUESTIONS = (
    "How are any two of these alike in some way?",
    "What is the opposite of that?",
)
LADDER_PROMPT = "Why does this make the drawing better or worse for you?"

# The complete participant-facing surface (audited: construct-history-free).
PARTICIPANT_ROUTES = (
    "GET /api/participant/sessions/{session_id}/triad",
    "POST /api/participant/sessions/{session_id}/constructs",
    "POST /api/participant/sessions/{session_id}/triad/complete",
    "POST /api/participant/sessions/{session_id}/elements",
    "GET /api/participant/sessions/{session_id}/progress",
    "GET /api/elements/{element_id}/svg",
)


class ApiError(Exception):
    def __init__(self, code: str, message: str, detail: Any = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.detail = detail


class StudyCreateRequest(BaseModel):
    elements: list[dict] | None = None
    generator: dict | None = None
    config: dict | None = None
    request_id: str | None = None


class SessionCreateRequest(BaseModel):
    participant: str
    seed: int
    request_id: str | None = None


class ConstructRequest(BaseModel):
    pole_a: str
    pole_b: str
    ladder_parent: str | None = None
    duplicate_of: str | None = None
    request_id: str | None = None


class ElementAddRequest(BaseModel):
    drawing: dict
    label: str = ""
    request_id: str | None = None


class CompleteRequest(BaseModel):
    request_id: str | None = None


class TerminateRequest(BaseModel):
    reason: str = "interviewer"
    request_id: str | None = None


class TagRequest(BaseModel):
    construct_id: str
    category: str
    analyst: str = "primary"
    request_id: str | None = None


class MapRequest(BaseModel):
    construct_id: str
    aesthetic: str
    analyst: str = "primary"
    request_id: str | None = None


def _element_view(element) -> dict[str, Any]:
    return {
        "id": element.id,
        "kind": element.kind,
        "label": element.label,
        "origin": element.origin,
        "svg_url": f"/api/elements/{element.id}/svg",
    }


def create_app(data_dir: str | Path) -> FastAPI:
    store = Store(data_dir)
    app = FastAPI(title="aesgrid", version="0.1.0")
    app.state.store = store
    analysis_log = store.root / "analysis.jsonl"

    def idempotent(request_id: str | None, fn: Callable[[], Any]) -> Any:
        if request_id:
            cached = store.idempotency.get(request_id)
            if cached is not None:
                return cached
        result = fn()
        if request_id:
            store.idempotency[request_id] = result
        return result

    def workspace() -> AnalysisWorkspace:
        ws = AnalysisWorkspace()
        for export in store.iter_exports():
            ws.add_session_export(export)
        if analysis_log.exists():
            for line in analysis_log.read_text().splitlines():
                if not line:
                    continue
                event = json.loads(line)
                if event["type"] == "tag":
                    ws.tag_construct(event["construct"], event["category"], event["analyst"])
                else:
                    ws.map_construct(event["construct"], event["aesthetic"], event["analyst"])
        return ws

    def append_analysis(event: dict[str, Any]) -> None:
        with analysis_log.open("a") as fh:
            fh.write(json.dumps(event, sort_keys=True) + "\n")

    @app.exception_handler(RgtError)
    async def _rgt_error(_: Request, exc: RgtError):
        return JSONResponse(
            status_code=_STATUS.get(exc.code, 400),
            content={"code": exc.code, "message": str(exc), "detail": None},
        )

    @app.exception_handler(ApiError)
    async def _api_error(_: Request, exc: ApiError):
        return JSONResponse(
            status_code=_STATUS.get(exc.code, 400),
            content={"code": exc.code, "message": exc.message, "detail": exc.detail},
        )

    # -- studies -------------------------------------------------------------

    @app.post("/api/studies")
    def create_study_endpoint(body: StudyCreateRequest):
        def apply():
            config = StudyConfig.from_dict(body.config) if body.config else StudyConfig()
            elements = []
            if body.generator is not None:
                spec = dict(body.generator)
                count = int(spec.pop("count", 12))
                params = GeneratorParams(**spec)
                elements.extend(
                    make_element(d, origin="generated") for d in generate_element_set(params, count)
                )
            for item in body.elements or []:
                if "drawing" in item:
                    payload: Any = Drawing.from_dict(item["drawing"])
                elif "image" in item:
                    payload = item["image"]
                else:
                    raise ApiError("invalid_element", "element needs a drawing or image payload")
                elements.append(
                    make_element(
                        payload,
                        origin=item.get("origin", "generated"),
                        label=item.get("label", ""),
                    )
                )
            study = create_study(elements, config)
            store.save_study(study)
            return {"study": study.id, "elements": [e.id for e in study.elements]}

        return idempotent(body.request_id, apply)

    @app.get("/api/studies")
    def list_studies():
        return {"studies": store.list_studies()}

    @app.get("/api/studies/{study_id}")
    def get_study(study_id: str):
        study = store.load_study(study_id)
        return {
            "id": study.id,
            "config": study.config.to_dict(),
            "elements": [_element_view(e) for e in study.elements],
        }

    # -- sessions (interviewer surface) ---------------------------------------

    @app.post("/api/studies/{study_id}/sessions")
    def start_session(study_id: str, body: SessionCreateRequest):
        def apply():
            session = store.start_session(study_id, body.participant, body.seed)
            return {"session": session.id, "study": study_id, "state": session.state}

        return idempotent(body.request_id, apply)

    @app.get("/api/sessions/{session_id}")
    def session_status(session_id: str):
        session = store.session(session_id)
        current = session.current_triad()
        return {
            "session": session.id,
            "study": session.study.id,
            "participant": session.participant,
            "state": session.state,
            "strikes": session.strikes,
            "strike_limit": session.study.config.strike_limit,
            "triads_completed": session.triads_completed,
            "construct_count": len(session.constructs),
            "current_triad": current.to_dict() if current else None,
            "pool_size": len(session.elements),
        }

    @app.get("/api/sessions/{session_id}/export")
    def session_export(session_id: str):
        return store.session(session_id).export()

    @app.post("/api/sessions/{session_id}/terminate")
    def terminate_session(session_id: str, body: TerminateRequest):
        def apply():
            session = store.session(session_id)
            with store.session_lock(session_id):
                session.terminate(body.reason)
            return {"session": session_id, "state": session.state}

        return idempotent(body.request_id, apply)

    # -- participant surface ---------------------------------------------------

    @app.get("/api/participant/sessions/{session_id}/triad")
    def participant_triad(session_id: str):
        session = store.session(session_id)
        with store.session_lock(session_id):
            view = ParticipantView(session).current_triad()
        if view is None:
            return {"state": "finished"}
        elements = [_element_view(session.element(eid)) for eid in view["elements"]]
        return {
            "state": "active",
            "triad": view["triad"],
            "elements": elements,
            "questions": list(INTERVIEW_QUESTIONS),
            "ladder_prompt": LADDER_PROMPT,
        }

    @app.post("/api/participant/sessions/{session_id}/constructs")
    def participant_construct(session_id: str, body: ConstructRequest):
        def apply():
            session = store.session(session_id)
            with store.session_lock(session_id):
                return ParticipantView(session).submit_construct(
                    body.pole_a,
                    body.pole_b,
                    ladder_parent=body.ladder_parent,
                    duplicate_of=body.duplicate_of,
                )

        return idempotent(body.request_id, apply)

    @app.post("/api/participant/sessions/{session_id}/triad/complete")
    def participant_complete(session_id: str, body: CompleteRequest):
        def apply():
            session = store.session(session_id)
            with store.session_lock(session_id):
                return ParticipantView(session).complete_triad()

        return idempotent(body.request_id, apply)

    @app.post("/api/participant/sessions/{session_id}/elements")
    def participant_element(session_id: str, body: ElementAddRequest):
        def apply():
            session = store.session(session_id)
            drawing = Drawing.from_dict(body.drawing)
            with store.session_lock(session_id):
                return ParticipantView(session).add_drawn_element(drawing, body.label)

        return idempotent(body.request_id, apply)

    @app.get("/api/participant/sessions/{session_id}/progress")
    def participant_progress(session_id: str):
        return store.session(session_id).progress()

    # -- elements ---------------------------------------------------------------

    @app.get("/api/elements/{element_id}/svg")
    def element_svg(element_id: str):
        element = store.find_element(element_id)
        if element.kind == "drawing":
            svg = render_svg(element.payload)
        else:
            svg = str(element.payload)
        return Response(content=svg, media_type="image/svg+xml")

    @app.get("/api/elements/{element_id}/metrics")
    def element_metrics(element_id: str):
        element = store.find_element(element_id)
        if element.kind != "drawing":
            raise ApiError("invalid_element", "metrics need a drawing element")
        return evaluate_all(element.payload).to_dict()

    # -- analysis ---------------------------------------------------------------

    @app.get("/api/analysis/constructs")
    def analysis_constructs(study: str | None = None, analyst: str = "primary"):
        ws = workspace()
        out = []
        for ref in ws.constructs(study):
            tag = ws.tag_of(ref.construct_id, analyst)
            mapping = ws.mapping_of(ref.construct_id, analyst)
            out.append(
                {
                    "construct": ref.construct_id,
                    "study": ref.study_id,
                    "participant": ref.participant,
                    "pole_a": ref.pole_a,
                    "pole_b": ref.pole_b,
                    "ladder_parent": ref.ladder_parent,
                    "category": tag.category if tag else None,
                    "aesthetic": mapping.aesthetic if mapping else None,
                }
            )
        return {"constructs": out}

    @app.post("/api/analysis/tags")
    def tag_construct(body: TagRequest):
        def apply():
            ws = workspace()
            tag = ws.tag_construct(body.construct_id, body.category, body.analyst)
            append_analysis(
                {
                    "type": "tag",
                    "construct": tag.construct_id,
                    "category": tag.category,
                    "analyst": tag.analyst,
                }
            )
            return tag.to_dict()

        return idempotent(body.request_id, apply)

    @app.post("/api/analysis/mappings")
    def map_construct(body: MapRequest):
        def apply():
            ws = workspace()
            mapping = ws.map_construct(body.construct_id, body.aesthetic, body.analyst)
            append_analysis(
                {
                    "type": "mapping",
                    "construct": mapping.construct_id,
                    "aesthetic": mapping.aesthetic,
                    "analyst": mapping.analyst,
                }
            )
            return mapping.to_dict()

        return idempotent(body.request_id, apply)

    @app.get("/api/reports/usage")
    def usage_report(studies: str | None = None, analyst: str = "primary"):
        ws = workspace()
        selected = studies.split(",") if studies else None
        report = ws.usage_report(selected, analyst)
        report["table"] = render_usage_table(report)
        return report

    @app.get("/api/reports/reproducibility")
    def reproducibility_report(studies: str | None = None, analyst: str = "primary"):
        ws = workspace()
        selected = studies.split(",") if studies else None
        return ws.reproducibility_report(selected, analyst)

    @app.get("/api/catalog")
    def get_catalog():
        return {"catalog": [entry.to_dict() for entry in catalog()]}

    return app


def serve(data_dir: str | Path, host: str = "127.0.0.1", port: int = 8000) -> None:
    """Run the service (blocking)."""
    import uvicorn

    uvicorn.run(create_app(data_dir), host=host, port=port, log_level="warning")
