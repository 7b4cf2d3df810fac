"""The CLI talks to the studio service over its HTTP API, either against a
remote base URL or an in-process app (same routes, no sockets)."""

from __future__ import annotations

import tempfile
from datetime import datetime, timedelta, timezone
from pathlib import Path

import httpx

from chainstage.engine.engine import EngineConfig
from chainstage.gateway.gateway import GatewayConfig, LlmGateway
from chainstage.ids import SeededIdFactory

_EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)


class SteppingClock:
    """One second per tick from a fixed origin; rehearsals are simulations,
    so their timestamps are virtual and reproducible."""

    def __init__(self, start: datetime = _EPOCH):
        self._now = start

    def __call__(self) -> datetime:
        self._now += timedelta(seconds=1)
        return self._now


def build_gateway(provider: str, seed_rules: Path | None) -> LlmGateway:
    config = GatewayConfig.from_env()
    config = GatewayConfig(
        provider=provider,
        completion_model=config.completion_model,
        persona_model=config.persona_model,
        api_base=config.api_base,
        api_key=config.api_key,
    )
    if seed_rules is not None:
        config = config.with_rules_file(seed_rules)
    return LlmGateway(config)


def make_client(
    server: str | None = None,
    *,
    data_dir: Path | None = None,
    provider: str = "mock",
    seed_rules: Path | None = None,
    deterministic: bool = False,
) -> httpx.Client:
    """A client for the studio API. With `server` set, a plain HTTP client;
    otherwise an in-process app over `data_dir` (or a throwaway directory)."""
    if server is not None:
        return httpx.Client(base_url=server.rstrip("/"), timeout=60.0)

    import warnings

    with warnings.catch_warnings():
        # some fastapi/starlette pairings warn at import time
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient
    from chainstage.service.app import ServiceConfig, create_app

    if data_dir is None:
        data_dir = Path(tempfile.mkdtemp(prefix="chainstage-"))
    engine_config = EngineConfig()
    if deterministic:
        engine_config = EngineConfig(
            clock=SteppingClock(), id_factory=SeededIdFactory()
        )
    app = create_app(
        ServiceConfig(
            data_dir=data_dir,
            gateway=build_gateway(provider, seed_rules),
            engine_config=engine_config,
        )
    )
    return TestClient(app, raise_server_exceptions=False)
