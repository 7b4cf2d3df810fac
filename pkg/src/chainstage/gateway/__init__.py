"""Uniform access to text-completion backends: one HTTP provider, one mock."""

from chainstage.gateway.gateway import GatewayConfig, LlmGateway
from chainstage.gateway.http import HttpProvider
from chainstage.gateway.mock import MockProvider, MockRule, MockRuleSet, load_mock_rules
from chainstage.gateway.types import (
    CompletionRequest,
    CompletionResult,
    GenerationParams,
    Purpose,
)

__all__ = [
    "CompletionRequest",
    "CompletionResult",
    "GatewayConfig",
    "GenerationParams",
    "HttpProvider",
    "LlmGateway",
    "MockProvider",
    "MockRule",
    "MockRuleSet",
    "Purpose",
    "load_mock_rules",
]
