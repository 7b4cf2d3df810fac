"""Deterministic mock provider: a pure function of (rules, prompt).

Rules are checked in order and the first match wins; the default response
makes the rule table total. Received requests are recorded so tests can
assert on routing and prompt bytes.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass, field

from chainstage.errors import ParseError
from chainstage.gateway.types import CompletionRequest, CompletionResult

_MATCH_KINDS = ("literal", "prefix", "contains")


@dataclass(frozen=True)
class MockRule:
    """Matches when every pattern hits the prompt under `match_kind`."""

    match_kind: str
    patterns: tuple[str, ...]
    response: str

    def matches(self, prompt: str) -> bool:
        if self.match_kind == "literal":
            return all(prompt == p for p in self.patterns)
        if self.match_kind == "prefix":
            return all(prompt.startswith(p) for p in self.patterns)
        return all(p in prompt for p in self.patterns)


@dataclass(frozen=True)
class MockRuleSet:
    rules: tuple[MockRule, ...] = ()
    default_response: str = "ok"

    def respond(self, prompt: str) -> str:
        for rule in self.rules:
            if rule.matches(prompt):
                return rule.response
        return self.default_response


def load_mock_rules(document: str) -> MockRuleSet:
    """Parse a rules file: {"rules": [{match_kind, pattern, response}...],
    "default_response": "..."}; `pattern` may be a string or a list of strings
    that must all match."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid rules JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno,
            column=exc.colno,
        )
    if not isinstance(data, dict):
        raise ParseError("rules document must be an object")
    rules = []
    raw_rules = data.get("rules", [])
    if not isinstance(raw_rules, list):
        raise ParseError("'rules' must be a list")
    for i, raw in enumerate(raw_rules):
        if not isinstance(raw, dict):
            raise ParseError(f"rule {i} must be an object")
        kind = raw.get("match_kind", "contains")
        if kind not in _MATCH_KINDS:
            raise ParseError(f"rule {i}: match_kind must be one of {_MATCH_KINDS}")
        pattern = raw.get("pattern")
        if isinstance(pattern, str):
            patterns: tuple[str, ...] = (pattern,)
        elif isinstance(pattern, list) and pattern and all(isinstance(p, str) for p in pattern):
            patterns = tuple(pattern)
        else:
            raise ParseError(f"rule {i}: pattern must be a string or non-empty list of strings")
        response = raw.get("response")
        if not isinstance(response, str):
            raise ParseError(f"rule {i}: response must be a string")
        rules.append(MockRule(match_kind=kind, patterns=patterns, response=response))
    default = data.get("default_response", "ok")
    if not isinstance(default, str):
        raise ParseError("default_response must be a string")
    return MockRuleSet(rules=tuple(rules), default_response=default)


@dataclass
class MockProvider:
    """Offline provider. The rule set is immutable; the request log is the
    only mutable state and is append-only behind a lock."""

    rules: MockRuleSet = field(default_factory=MockRuleSet)
    name: str = "mock"

    def __post_init__(self):
        self._lock = threading.Lock()
        self._requests: list[CompletionRequest] = []

    @property
    def requests(self) -> list[CompletionRequest]:
        with self._lock:
            return list(self._requests)

    def complete(self, request: CompletionRequest) -> CompletionResult:
        start = time.perf_counter()
        with self._lock:
            self._requests.append(request)
        text = self.rules.respond(request.prompt)
        return CompletionResult(
            text=text,
            purpose=request.purpose,
            provider=self.name,
            latency_s=time.perf_counter() - start,
        )
