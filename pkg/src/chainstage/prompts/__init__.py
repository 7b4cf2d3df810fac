"""Prompt rendering and model-output parsing for the three prompt families."""

from chainstage.prompts.bundles import PromptBundle, PromptKind, expected_slots
from chainstage.prompts.parse import ClassDecision, parse_class_decision
from chainstage.prompts.render import (
    PersonaPhase,
    render_classifier_prompt,
    render_general_context,
    render_persona_prompt,
    render_reaction_prompt,
    render_transcript,
)
from chainstage.prompts.templates import TEMPLATE_VERSION

__all__ = [
    "ClassDecision",
    "PersonaPhase",
    "PromptBundle",
    "PromptKind",
    "TEMPLATE_VERSION",
    "expected_slots",
    "parse_class_decision",
    "render_classifier_prompt",
    "render_general_context",
    "render_persona_prompt",
    "render_reaction_prompt",
    "render_transcript",
]
