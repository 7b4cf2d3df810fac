"""HTTP service binding designs, sessions, and persona suggestions together."""

from chainstage.service.app import ServiceConfig, create_app

__all__ = ["ServiceConfig", "create_app"]
