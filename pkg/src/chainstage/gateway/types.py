"""Request/response value types shared by every completion provider."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

MAX_TEMPERATURE = 2.0
MAX_TOKENS_LIMIT = 1024


class Purpose(str, Enum):
    """Why a completion is requested; drives model and temperature defaults."""

    CLASSIFY = "classify"
    GENERATE = "generate"
    PERSONA = "persona"


@dataclass(frozen=True)
class GenerationParams:
    model_id: str
    temperature: float = 0.0
    max_tokens: int = 256
    stop_sequences: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.model_id:
            raise ValueError("model_id must be set")
        if not 0.0 <= self.temperature <= MAX_TEMPERATURE:
            raise ValueError(f"temperature must be in [0, {MAX_TEMPERATURE}]")
        if not 0 < self.max_tokens <= MAX_TOKENS_LIMIT:
            raise ValueError(f"max_tokens must be in (0, {MAX_TOKENS_LIMIT}]")


@dataclass(frozen=True)
class CompletionRequest:
    prompt: str
    params: GenerationParams
    purpose: Purpose


@dataclass(frozen=True)
class CompletionResult:
    text: str
    purpose: Purpose
    provider: str
    latency_s: float = 0.0
    prompt_tokens: int | None = None
    completion_tokens: int | None = None
