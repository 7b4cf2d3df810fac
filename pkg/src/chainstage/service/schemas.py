"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from datetime import datetime

from pydantic import BaseModel, Field

from chainstage.engine.session import SessionState, StepOutcome
from chainstage.prompts.bundles import PromptBundle


class ErrorBody(BaseModel):
    code: str
    detail: str
    violations: list[ViolationModel] | None = None


class ViolationModel(BaseModel):
    code: str
    path: str
    detail: str


class ValidationReportModel(BaseModel):
    violations: list[ViolationModel]


class DesignSummary(BaseModel):
    design_id: str
    title: str
    version: int
    updated_at: datetime


class DesignListResponse(BaseModel):
    designs: list[DesignSummary]


class PutDesignResponse(BaseModel):
    design_id: str
    version: int


class PromptBundleModel(BaseModel):
    kind: str
    rendered: str
    slots: dict[str, str | list[str]]
    template_version: str

    @classmethod
    def from_bundle(cls, bundle: PromptBundle) -> "PromptBundleModel":
        data = bundle.to_dict()
        return cls(**data)


class StepOutcomeModel(BaseModel):
    reply: str
    route: str | None
    mode: str
    prompt_audit: list[PromptBundleModel]

    @classmethod
    def from_outcome(cls, outcome: StepOutcome) -> "StepOutcomeModel":
        return cls(
            reply=outcome.reply,
            route=outcome.route,
            mode=outcome.mode.value,
            prompt_audit=[PromptBundleModel.from_bundle(b) for b in outcome.prompt_audit],
        )


class PositionModel(BaseModel):
    kind: str
    node_id: str | None


class SessionModel(BaseModel):
    session_id: str
    design_id: str
    design_version: int
    position: PositionModel
    fallback_count: int
    student_turns: int
    created_at: datetime

    @classmethod
    def from_state(cls, state: SessionState, design_version: int) -> "SessionModel":
        return cls(
            session_id=state.session_id,
            design_id=state.design_id,
            design_version=design_version,
            position=PositionModel(**state.position.to_dict()),
            fallback_count=state.fallback_count,
            student_turns=state.student_turns(),
            created_at=state.created_at,
        )


class StartSessionRequest(BaseModel):
    design_id: str
    comment: str


class MessageRequest(BaseModel):
    text: str


class SessionEnvelope(BaseModel):
    session: SessionModel
    outcome: StepOutcomeModel | None = None


class SuggestCommentRequest(BaseModel):
    persona: str = Field(pattern="^(aggressive|upstander|passive)$")


class SuggestionResponse(BaseModel):
    persona: str
    text: str


class HealthResponse(BaseModel):
    status: str


class VersionResponse(BaseModel):
    version: str


ErrorBody.model_rebuild()
