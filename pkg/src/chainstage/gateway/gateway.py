"""The gateway picks a provider and fills per-purpose parameter defaults.

Classification runs at temperature 0 so routing stays stable; generation and
persona calls default to 0.7 so replies vary between rehearsals. Purposes
map to the two configured models: CLASSIFY and GENERATE share the completion
model, PERSONA uses the persona model.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from chainstage.errors import ChainstageError
from chainstage.gateway.http import HttpProvider
from chainstage.gateway.mock import MockProvider, MockRuleSet, load_mock_rules
from chainstage.gateway.types import (
    CompletionRequest,
    CompletionResult,
    GenerationParams,
    Purpose,
)

DEFAULT_COMPLETION_MODEL = "text-davinci-003"
DEFAULT_PERSONA_MODEL = "gpt-3.5-turbo"

_DEFAULT_TEMPERATURES = {
    Purpose.CLASSIFY: 0.0,
    Purpose.GENERATE: 0.7,
    Purpose.PERSONA: 0.7,
}

ENV_PROVIDER = "CHAINSTAGE_PROVIDER"
ENV_API_KEY = "CHAINSTAGE_API_KEY"
ENV_API_BASE = "CHAINSTAGE_API_BASE"
ENV_MODEL_COMPLETION = "CHAINSTAGE_MODEL_COMPLETION"
ENV_MODEL_PERSONA = "CHAINSTAGE_MODEL_PERSONA"


@dataclass(frozen=True)
class GatewayConfig:
    provider: str = "mock"
    completion_model: str = DEFAULT_COMPLETION_MODEL
    persona_model: str = DEFAULT_PERSONA_MODEL
    api_base: str | None = None
    api_key: str | None = None
    mock_rules: MockRuleSet = field(default_factory=MockRuleSet)

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> "GatewayConfig":
        env = os.environ if environ is None else environ
        return cls(
            provider=env.get(ENV_PROVIDER, "mock"),
            completion_model=env.get(ENV_MODEL_COMPLETION, DEFAULT_COMPLETION_MODEL),
            persona_model=env.get(ENV_MODEL_PERSONA, DEFAULT_PERSONA_MODEL),
            api_base=env.get(ENV_API_BASE),
            api_key=env.get(ENV_API_KEY),
        )

    def with_rules_file(self, path: Path) -> "GatewayConfig":
        rules = load_mock_rules(path.read_text(encoding="utf-8"))
        return GatewayConfig(
            provider=self.provider,
            completion_model=self.completion_model,
            persona_model=self.persona_model,
            api_base=self.api_base,
            api_key=self.api_key,
            mock_rules=rules,
        )


class LlmGateway:
    """Shareable across sessions; providers are stateless per request."""

    def __init__(self, config: GatewayConfig, provider=None):
        self.config = config
        if provider is not None:
            self._provider = provider
        elif config.provider == "mock":
            # Mock mode constructs no HTTP machinery at all: nothing to leak
            # a request to a real backend.
            self._provider = MockProvider(rules=config.mock_rules)
        elif config.provider == "http":
            if not config.api_base:
                raise ChainstageError(
                    "http provider needs an API base URL", code="PROVIDER_UNAVAILABLE"
                )
            self._provider = HttpProvider(config.api_base, config.api_key)
        else:
            raise ChainstageError(
                f"unknown provider {config.provider!r}", code="PROVIDER_UNAVAILABLE"
            )

    @property
    def provider(self):
        return self._provider

    def default_params(self, purpose: Purpose) -> GenerationParams:
        model = (
            self.config.persona_model
            if purpose is Purpose.PERSONA
            else self.config.completion_model
        )
        return GenerationParams(
            model_id=model, temperature=_DEFAULT_TEMPERATURES[purpose]
        )

    def complete(
        self, prompt: str, purpose: Purpose, params: GenerationParams | None = None
    ) -> CompletionResult:
        if not prompt:
            raise ChainstageError("prompt must not be empty", code="EMPTY_PROMPT")
        request = CompletionRequest(
            prompt=prompt,
            params=params or self.default_params(purpose),
            purpose=purpose,
        )
        return self._provider.complete(request)
