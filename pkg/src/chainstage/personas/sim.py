"""Generate suggested student texts from the persona prompts.

Suggestions are stateless: they depend only on the supplied scenario and
transcript, never on session state, so the teacher can switch personas
freely mid-conversation and discard anything generated.
"""

from __future__ import annotations

from typing import Sequence

from chainstage.errors import InvalidScenarioError, PromptInputError
from chainstage.gateway.gateway import LlmGateway
from chainstage.gateway.types import Purpose
from chainstage.graph.model import Scenario
from chainstage.graph.validation import scenario_violations
from chainstage.personas.spec import PersonaSpec
from chainstage.prompts.render import (
    PersonaPhase,
    render_persona_prompt,
    render_transcript,
)

DEFAULT_CHATBOT_NAME = "Chatbot"


def _check_scenario(scenario: Scenario) -> None:
    violations = scenario_violations(scenario)
    if violations:
        raise InvalidScenarioError(violations[0].detail)


def _clean(text: str, student_name: str) -> str:
    """Trim, and drop a leading "Name:" echo if the model produced one."""
    text = text.strip()
    prefix = f"{student_name}:"
    if text.startswith(prefix):
        text = text[len(prefix) :].lstrip()
    return text


def suggest_comment(spec: PersonaSpec, scenario: Scenario, gateway: LlmGateway) -> str:
    """One suggested comment this persona would post under the scenario."""
    _check_scenario(scenario)
    bundle = render_persona_prompt(spec, scenario, PersonaPhase.COMMENT)
    result = gateway.complete(bundle.rendered, Purpose.PERSONA)
    return _clean(result.text, spec.student_name)


def suggest_reply(
    spec: PersonaSpec,
    scenario: Scenario,
    comment: str,
    transcript: Sequence[tuple[str, str]],
    gateway: LlmGateway,
    *,
    chatbot_name: str = DEFAULT_CHATBOT_NAME,
) -> str:
    """One suggested answer to the chatbot, given the conversation so far.

    `transcript` is (speaker, text) pairs with speaker "chatbot" or "student";
    it must contain at least one chatbot turn to reply to.
    """
    _check_scenario(scenario)
    if not comment.strip():
        raise PromptInputError("persona reply needs the opening comment", code="MISSING_CONTEXT")
    if not any(speaker == "chatbot" for speaker, _ in transcript):
        raise PromptInputError(
            "persona reply needs at least one chatbot turn", code="MISSING_CONTEXT"
        )
    view = render_transcript(transcript, chatbot_name=chatbot_name, student_name=spec.student_name)
    bundle = render_persona_prompt(
        spec, scenario, PersonaPhase.REPLY, comment=comment, transcript_view=view
    )
    result = gateway.complete(bundle.rendered, Purpose.PERSONA)
    return _clean(result.text, spec.student_name)
