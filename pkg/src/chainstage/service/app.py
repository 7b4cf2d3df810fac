"""FastAPI application wiring stores, engine, and personas behind HTTP.

Every mutating session endpoint is serialized per session id and delegates
to the engine's atomic step, so a provider failure surfaces as an error
response with the session unchanged. Stored designs always pass validation;
drafts can be checked without persisting via the validate endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from chainstage import __version__
from chainstage.errors import ChainstageError, NotFoundError, RateLimitedError
from chainstage.engine.engine import ConversationEngine, EngineConfig
from chainstage.engine.session import PositionKind, Speaker
from chainstage.gateway.gateway import GatewayConfig, LlmGateway
from chainstage.graph.serialization import deserialize_design
from chainstage.graph.validation import validate_design
from chainstage.personas.sim import suggest_comment, suggest_reply
from chainstage.personas.spec import PersonaKind, PersonaSpec
from chainstage.service import schemas
from chainstage.service.storage import DesignStore, SessionRecord, SessionStore

_STATUS_BY_CODE = {
    "PARSE_ERROR": 422,
    "SCHEMA_ERROR": 422,
    "INVALID_DESIGN": 422,
    "INVALID_SCENARIO": 422,
    "EMPTY_COMMENT": 422,
    "EMPTY_MESSAGE": 422,
    "EMPTY_CANDIDATES": 422,
    "EMPTY_EXAMPLES": 422,
    "EMPTY_CONTEXT": 422,
    "MISSING_CONTEXT": 422,
    "DESIGN_NOT_FOUND": 404,
    "SESSION_NOT_FOUND": 404,
    "VERSION_CONFLICT": 409,
    "ALREADY_STARTED": 409,
    "RATE_LIMITED": 429,
    "AUTH_ERROR": 502,
    "PROMPT_TOO_LARGE": 502,
    "PROVIDER_UNAVAILABLE": 503,
}


@dataclass
class ServiceConfig:
    data_dir: Path
    gateway: LlmGateway | None = None
    gateway_config: GatewayConfig | None = None
    engine_config: EngineConfig = field(default_factory=EngineConfig)


def create_app(config: ServiceConfig) -> FastAPI:
    gateway = config.gateway or LlmGateway(config.gateway_config or GatewayConfig.from_env())
    engine = ConversationEngine(gateway, config.engine_config)
    designs = DesignStore(config.data_dir)
    sessions = SessionStore(config.data_dir)

    app = FastAPI(
        title="chainstage studio",
        version=__version__,
        openapi_url="/openapi",
    )
    app.state.gateway = gateway

    # the browser studio is served from its own origin
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
        expose_headers=["ETag"],
    )

    @app.exception_handler(ChainstageError)
    def domain_error_handler(request: Request, exc: ChainstageError) -> JSONResponse:
        status = _STATUS_BY_CODE.get(exc.code, 500)
        body: dict = {"code": exc.code, "detail": exc.message}
        headers = {}
        if isinstance(exc, RateLimitedError) and exc.retry_after is not None:
            headers["Retry-After"] = str(exc.retry_after)
        return JSONResponse(status_code=status, content=body, headers=headers)

    # -- designs ---------------------------------------------------------

    @app.put("/designs/{design_id}", response_model=schemas.PutDesignResponse, status_code=200)
    async def put_design(design_id: str, request: Request, response: Response):
        raw = await request.body()
        design = deserialize_design(raw)
        if design.design_id != design_id:
            raise ChainstageError(
                f"document design_id {design.design_id!r} does not match the path",
                code="SCHEMA_ERROR",
            )
        report = validate_design(design)
        if not report.ok:
            return JSONResponse(
                status_code=422,
                content={
                    "code": "INVALID_DESIGN",
                    "detail": f"{len(report.violations)} violations",
                    "violations": [v.to_dict() for v in report.violations],
                },
            )
        expected = _expected_version(request)
        version, created, _ = designs.put(design, expected_version=expected)
        response.status_code = 201 if created else 200
        response.headers["ETag"] = f'"{version}"'
        return schemas.PutDesignResponse(design_id=design_id, version=version)

    @app.get("/designs", response_model=schemas.DesignListResponse)
    def list_designs():
        return schemas.DesignListResponse(
            designs=[schemas.DesignSummary(**row) for row in designs.list()]
        )

    @app.get("/designs/{design_id}")
    def get_design(design_id: str):
        raw, version = designs.get_bytes(design_id)
        return Response(
            content=raw,
            media_type="application/json",
            headers={"ETag": f'"{version}"'},
        )

    @app.delete("/designs/{design_id}", status_code=204)
    def delete_design(design_id: str):
        designs.delete(design_id)

    @app.post("/designs/{design_id}/validate", response_model=schemas.ValidationReportModel)
    async def validate_draft(design_id: str, request: Request):
        raw = await request.body()
        if raw:
            design = deserialize_design(raw)
        else:
            design, _ = designs.get(design_id)
        report = validate_design(design)
        return schemas.ValidationReportModel(
            violations=[schemas.ViolationModel(**v.to_dict()) for v in report.violations]
        )

    @app.post("/designs/{design_id}/suggest-comment", response_model=schemas.SuggestionResponse)
    def suggest_opening_comment(design_id: str, body: schemas.SuggestCommentRequest):
        design, _ = designs.get(design_id)
        spec = PersonaSpec(PersonaKind(body.persona))
        text = suggest_comment(spec, design.scenario, gateway)
        return schemas.SuggestionResponse(persona=body.persona, text=text)

    # -- sessions --------------------------------------------------------

    @app.post("/sessions", response_model=schemas.SessionEnvelope, status_code=201)
    def start_session(body: schemas.StartSessionRequest):
        design, version = designs.get(body.design_id)
        state, outcome = engine.start_session(design, body.comment)
        record = SessionRecord(state, design, version)
        sessions.create(record)
        sessions.log_step(record, outcome.mode.value, outcome.route)
        return _envelope(record, outcome)

    @app.post("/sessions/{session_id}/messages", response_model=schemas.SessionEnvelope)
    def post_message(session_id: str, body: schemas.MessageRequest):
        record = sessions.get(session_id)
        with record.lock:
            if record.state.position.kind is PositionKind.AWAITING_COMMENT:
                outcome = engine.open_session(record.design, record.state, body.text)
            else:
                outcome = engine.step(record.design, record.state, body.text)
            sessions.log_step(record, outcome.mode.value, outcome.route)
        return _envelope(record, outcome)

    @app.post("/sessions/{session_id}/reset", response_model=schemas.SessionEnvelope)
    def reset_session(session_id: str):
        record = sessions.get(session_id)
        with record.lock:
            engine.reset_session(record.state)
            sessions.log_reset(record)
        return _envelope(record, None)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        record = sessions.get(session_id)
        return _envelope(record, None)

    @app.get("/sessions/{session_id}/transcript")
    def get_transcript(session_id: str):
        record = sessions.get(session_id)
        return PlainTextResponse(
            record.state.transcript_jsonl(), media_type="application/x-ndjson"
        )

    @app.get("/sessions/{session_id}/suggestions", response_model=schemas.SuggestionResponse)
    def get_suggestion(
        session_id: str,
        persona: str = Query(pattern="^(aggressive|upstander|passive)$"),
    ):
        record = sessions.get(session_id)
        state = record.state
        comment = next(
            (t.text for t in state.transcript if t.speaker is Speaker.STUDENT), None
        )
        if comment is None:
            raise ChainstageError(
                "session has no conversation to reply to; use suggest-comment first",
                code="MISSING_CONTEXT",
            )
        spec = PersonaSpec(PersonaKind(persona))
        text = suggest_reply(
            spec,
            record.design.scenario,
            comment,
            [(t.speaker.value, t.text) for t in state.transcript],
            gateway,
            chatbot_name=config.engine_config.chatbot_name,
        )
        return schemas.SuggestionResponse(persona=persona, text=text)

    # -- meta --------------------------------------------------------------

    @app.get("/healthz", response_model=schemas.HealthResponse)
    def healthz():
        return schemas.HealthResponse(status="ok")

    @app.get("/version", response_model=schemas.VersionResponse)
    def version():
        return schemas.VersionResponse(version=__version__)

    return app


def _expected_version(request: Request) -> int | None:
    header = request.headers.get("If-Match")
    if header is None:
        return None
    cleaned = header.strip().strip('"')
    try:
        return int(cleaned)
    except ValueError:
        raise ChainstageError(
            f"If-Match must be a version number, got {header!r}", code="VERSION_CONFLICT"
        )


def _envelope(record: SessionRecord, outcome) -> schemas.SessionEnvelope:
    return schemas.SessionEnvelope(
        session=schemas.SessionModel.from_state(record.state, record.design_version),
        outcome=schemas.StepOutcomeModel.from_outcome(outcome) if outcome else None,
    )
