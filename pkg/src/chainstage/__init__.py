"""Chainstage: author dialogue-tree chatbots and rehearse them against simulated students."""

__version__ = "0.1.0"

SCHEMA_VERSION = "chainstage/1"
