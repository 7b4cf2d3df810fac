"""Completion over an OpenAI-style HTTP endpoint with bounded retries."""

from __future__ import annotations

import time
from typing import Callable

import httpx

from chainstage.errors import (
    AuthError,
    PromptTooLargeError,
    ProviderUnavailableError,
    RateLimitedError,
)
from chainstage.gateway.types import CompletionRequest, CompletionResult

# Transient statuses retried with exponential backoff before giving up.
_RETRY_STATUSES = {429, 500, 502, 503, 504}
_BACKOFF_SECONDS = (0.5, 1.0, 2.0)


class HttpProvider:
    name = "http"

    def __init__(
        self,
        base_url: str,
        api_key: str | None = None,
        *,
        timeout: float = 30.0,
        transport: httpx.BaseTransport | None = None,
        sleep: Callable[[float], None] = time.sleep,
    ):
        headers = {}
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        self._client = httpx.Client(
            base_url=base_url.rstrip("/"),
            headers=headers,
            timeout=timeout,
            transport=transport,
        )
        self._sleep = sleep

    def close(self) -> None:
        self._client.close()

    def complete(self, request: CompletionRequest) -> CompletionResult:
        payload = {
            "model": request.params.model_id,
            "prompt": request.prompt,
            "temperature": request.params.temperature,
            "max_tokens": request.params.max_tokens,
        }
        if request.params.stop_sequences:
            payload["stop"] = list(request.params.stop_sequences)

        start = time.perf_counter()
        response = self._post_with_retries(payload)
        data = response.json()
        try:
            text = data["choices"][0]["text"]
        except (KeyError, IndexError, TypeError):
            raise ProviderUnavailableError("malformed completion response")
        usage = data.get("usage") or {}
        return CompletionResult(
            text=text,
            purpose=request.purpose,
            provider=self.name,
            latency_s=time.perf_counter() - start,
            prompt_tokens=usage.get("prompt_tokens"),
            completion_tokens=usage.get("completion_tokens"),
        )

    def _post_with_retries(self, payload: dict) -> httpx.Response:
        last_error: Exception | None = None
        last_response: httpx.Response | None = None
        for attempt in range(len(_BACKOFF_SECONDS) + 1):
            if attempt > 0:
                self._sleep(_BACKOFF_SECONDS[attempt - 1])
            try:
                response = self._client.post("/completions", json=payload)
            except httpx.HTTPError as exc:
                last_error = exc
                continue
            if response.status_code == 200:
                return response
            if response.status_code in (401, 403):
                raise AuthError(f"provider rejected credentials ({response.status_code})")
            if response.status_code == 413 or _is_prompt_too_large(response):
                raise PromptTooLargeError("prompt exceeds the provider's context window")
            if response.status_code in _RETRY_STATUSES:
                last_response = response
                continue
            raise ProviderUnavailableError(
                f"provider returned unexpected status {response.status_code}"
            )
        if last_response is not None and last_response.status_code == 429:
            raise RateLimitedError(
                "provider rate limit persisted across retries",
                retry_after=_retry_after_seconds(last_response),
            )
        detail = last_error or (last_response.status_code if last_response else "no response")
        raise ProviderUnavailableError(f"provider unavailable after retries: {detail}")


def _is_prompt_too_large(response: httpx.Response) -> bool:
    if response.status_code != 400:
        return False
    try:
        body = response.json()
    except ValueError:
        return False
    message = str(body.get("error", {}).get("message", "")) if isinstance(body, dict) else ""
    code = str(body.get("error", {}).get("code", "")) if isinstance(body, dict) else ""
    return "context" in message.lower() or code == "context_length_exceeded"


def _retry_after_seconds(response: httpx.Response) -> float | None:
    value = response.headers.get("Retry-After")
    if value is None:
        return None
    try:
        return float(value)
    except ValueError:
        return None
