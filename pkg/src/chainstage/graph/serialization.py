"""Canonical JSON form of a dialogue design.

The format is closed and byte-stable: fixed key order, node order preserved
as authored, UTF-8 with LF line endings, timestamps in UTC with a Z suffix.
Unknown fields are rejected so stored documents and golden fixtures cannot
drift silently. `serialize(deserialize(s)) == s` holds byte-for-byte for any
canonical document `s`.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from typing import Any

from chainstage import SCHEMA_VERSION
from chainstage.errors import ParseError, SchemaError
from chainstage.graph.model import (
    MAX_EXAMPLE_LENGTH,
    MAX_LABEL_LENGTH,
    BehaviorNode,
    DialogueDesign,
    Node,
    ReactionNode,
    Scenario,
)

_DESIGN_KEYS = (
    "schema",
    "design_id",
    "title",
    "scenario",
    "root_behaviors",
    "nodes",
    "created_at",
    "updated_at",
)
_SCENARIO_KEYS = (
    "scenario_id",
    "victim_name",
    "bully_name",
    "post_text",
    "bully_comment",
    "post_image_note",
)
_BEHAVIOR_KEYS = ("kind", "node_id", "label", "examples", "reaction_child")
_REACTION_KEYS = ("kind", "node_id", "instruction_label", "examples", "behavior_children")


def _format_timestamp(value: datetime) -> str:
    value = value.astimezone(timezone.utc)
    return value.isoformat().replace("+00:00", "Z")


def _parse_timestamp(raw: Any, field: str) -> datetime:
    if not isinstance(raw, str):
        raise SchemaError(f"{field} must be an ISO-8601 string", field=field)
    try:
        parsed = datetime.fromisoformat(raw.replace("Z", "+00:00"))
    except ValueError:
        raise SchemaError(f"{field} is not a valid timestamp: {raw!r}", field=field)
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed.astimezone(timezone.utc)


def _require_str(data: dict, field: str, *, allow_empty: bool = False, max_length: int | None = None) -> str:
    value = data.get(field)
    if not isinstance(value, str):
        raise SchemaError(f"{field} must be a string", field=field)
    if not allow_empty and not value.strip():
        raise SchemaError(f"{field} must not be empty", field=field)
    if max_length is not None and len(value) > max_length:
        raise SchemaError(f"{field} exceeds {max_length} characters", field=field)
    return value


def _require_str_list(data: dict, field: str, *, max_item_length: int | None = None) -> tuple[str, ...]:
    value = data.get(field)
    if not isinstance(value, list) or any(not isinstance(item, str) for item in value):
        raise SchemaError(f"{field} must be a list of strings", field=field)
    if max_item_length is not None:
        for i, item in enumerate(value):
            if len(item) > max_item_length:
                raise SchemaError(
                    f"{field}[{i}] exceeds {max_item_length} characters", field=f"{field}[{i}]"
                )
    return tuple(value)


def _reject_unknown(data: dict, allowed: tuple[str, ...], context: str) -> None:
    for key in data:
        if key not in allowed:
            field = f"{context}.{key}" if context else key
            raise SchemaError(f"unknown field {field}", field=field)


def _scenario_to_dict(scenario: Scenario) -> dict[str, Any]:
    out: dict[str, Any] = {
        "scenario_id": scenario.scenario_id,
        "victim_name": scenario.victim_name,
        "bully_name": scenario.bully_name,
        "post_text": scenario.post_text,
        "bully_comment": scenario.bully_comment,
    }
    if scenario.post_image_note is not None:
        out["post_image_note"] = scenario.post_image_note
    return out


def _scenario_from_dict(data: Any) -> Scenario:
    if not isinstance(data, dict):
        raise SchemaError("scenario must be an object", field="scenario")
    _reject_unknown(data, _SCENARIO_KEYS, "scenario")
    note = data.get("post_image_note")
    if note is not None and not isinstance(note, str):
        raise SchemaError("scenario.post_image_note must be a string", field="scenario.post_image_note")
    return Scenario(
        scenario_id=_require_str(data, "scenario_id"),
        victim_name=_require_str(data, "victim_name", allow_empty=True),
        bully_name=_require_str(data, "bully_name", allow_empty=True),
        post_text=_require_str(data, "post_text", allow_empty=True),
        bully_comment=_require_str(data, "bully_comment", allow_empty=True),
        post_image_note=note,
    )


def _node_to_dict(node: Node) -> dict[str, Any]:
    if isinstance(node, BehaviorNode):
        return {
            "kind": "behavior",
            "node_id": node.node_id,
            "label": node.label,
            "examples": list(node.examples),
            "reaction_child": node.reaction_child,
        }
    return {
        "kind": "reaction",
        "node_id": node.node_id,
        "instruction_label": node.instruction_label,
        "examples": list(node.examples),
        "behavior_children": list(node.behavior_children),
    }


def _node_from_dict(node_id: str, data: Any) -> Node:
    context = f"nodes.{node_id}"
    if not isinstance(data, dict):
        raise SchemaError(f"{context} must be an object", field=context)
    kind = data.get("kind")
    if kind == "behavior":
        _reject_unknown(data, _BEHAVIOR_KEYS, context)
        child = data.get("reaction_child")
        if child is not None and not isinstance(child, str):
            raise SchemaError(
                f"{context}.reaction_child must be a string or null",
                field=f"{context}.reaction_child",
            )
        node: Node = BehaviorNode(
            node_id=_require_str(data, "node_id"),
            label=_require_str(data, "label", max_length=MAX_LABEL_LENGTH),
            examples=_require_str_list(data, "examples", max_item_length=MAX_EXAMPLE_LENGTH),
            reaction_child=child,
        )
    elif kind == "reaction":
        _reject_unknown(data, _REACTION_KEYS, context)
        node = ReactionNode(
            node_id=_require_str(data, "node_id"),
            instruction_label=_require_str(data, "instruction_label", max_length=MAX_LABEL_LENGTH),
            examples=_require_str_list(data, "examples", max_item_length=MAX_EXAMPLE_LENGTH),
            behavior_children=_require_str_list(data, "behavior_children"),
        )
    else:
        raise SchemaError(
            f"{context}.kind must be 'behavior' or 'reaction'", field=f"{context}.kind"
        )
    if node.node_id != node_id:
        raise SchemaError(
            f"{context}.node_id does not match its key", field=f"{context}.node_id"
        )
    return node


def design_to_dict(design: DialogueDesign) -> dict[str, Any]:
    """Plain-dict form in canonical key order (what the HTTP API returns)."""
    return {
        "schema": SCHEMA_VERSION,
        "design_id": design.design_id,
        "title": design.title,
        "scenario": _scenario_to_dict(design.scenario),
        "root_behaviors": list(design.root_behaviors),
        "nodes": {node_id: _node_to_dict(node) for node_id, node in design.nodes.items()},
        "created_at": _format_timestamp(design.created_at),
        "updated_at": _format_timestamp(design.updated_at),
    }


def serialize_design(design: DialogueDesign) -> str:
    """Render the canonical document. Callers persist only validated designs."""
    return json.dumps(design_to_dict(design), indent=2, ensure_ascii=False) + "\n"


def design_from_dict(data: Any) -> DialogueDesign:
    if not isinstance(data, dict):
        raise SchemaError("document root must be an object", field="")
    _reject_unknown(data, _DESIGN_KEYS, "")
    schema = data.get("schema")
    if schema != SCHEMA_VERSION:
        raise SchemaError(
            f"schema must be {SCHEMA_VERSION!r}, got {schema!r}", field="schema"
        )
    raw_nodes = data.get("nodes")
    if not isinstance(raw_nodes, dict):
        raise SchemaError("nodes must be an object keyed by node id", field="nodes")
    root_behaviors = _require_str_list(data, "root_behaviors")
    if not root_behaviors:
        raise SchemaError("root_behaviors must list at least one behavior", field="root_behaviors")
    return DialogueDesign(
        design_id=_require_str(data, "design_id"),
        title=_require_str(data, "title"),
        scenario=_scenario_from_dict(data.get("scenario")),
        root_behaviors=root_behaviors,
        nodes={node_id: _node_from_dict(node_id, raw) for node_id, raw in raw_nodes.items()},
        created_at=_parse_timestamp(data.get("created_at"), "created_at"),
        updated_at=_parse_timestamp(data.get("updated_at"), "updated_at"),
    )


def deserialize_design(document: str | bytes) -> DialogueDesign:
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not valid UTF-8: {exc}")
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno,
            column=exc.colno,
        )
    return design_from_dict(data)
