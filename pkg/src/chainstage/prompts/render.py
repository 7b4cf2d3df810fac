"""Assemble the prompt families from designs, scenarios, and conversation state.

Rendering is pure: same inputs, same bytes. Few-shot example numbering runs
as one global counter across all candidate categories, and the query always
takes the next number.
"""

from __future__ import annotations

from enum import Enum
from typing import TYPE_CHECKING, Sequence

from chainstage.errors import PromptInputError
from chainstage.graph.model import BehaviorNode, ReactionNode, Scenario
from chainstage.prompts import templates
from chainstage.prompts.bundles import PromptBundle, PromptKind

if TYPE_CHECKING:  # avoids a runtime cycle with the personas package
    from chainstage.personas.spec import PersonaSpec


class PersonaPhase(str, Enum):
    COMMENT = "comment"  # first post under the scenario
    REPLY = "reply"  # next answer inside the chat


def render_general_context(scenario: Scenario) -> str:
    """Canonical text form of the scenario, as personas see it."""
    text = templates.GENERAL_CONTEXT_TEMPLATE.format(
        victim_name=scenario.victim_name,
        post_text=scenario.post_text,
        bully_name=scenario.bully_name,
        bully_comment=scenario.bully_comment,
    )
    if scenario.post_image_note is not None:
        text += templates.GENERAL_CONTEXT_IMAGE_LINE.format(
            post_image_note=scenario.post_image_note
        )
    return text


def render_transcript(
    turns: Sequence[tuple[str, str]], chatbot_name: str, student_name: str
) -> str:
    """One "Name: text" line per turn, chronological. Empty transcript -> ""."""
    lines = []
    for speaker, text in turns:
        name = chatbot_name if speaker == "chatbot" else student_name
        lines.append(f"{name}: {text}")
    return "\n".join(lines)


def render_classifier_prompt(
    scenario: Scenario, candidates: Sequence[BehaviorNode], message: str
) -> PromptBundle:
    """Few-shot classification prompt over the candidate behavior labels."""
    if not candidates:
        raise PromptInputError("no candidate behaviors to classify against", code="EMPTY_CANDIDATES")
    if not message.strip():
        raise PromptInputError("student message is empty", code="EMPTY_MESSAGE")

    labels = [c.label for c in candidates]
    prompt_classes = "\n".join(labels)
    header = templates.CLASSIFIER_HEADER.format(
        victim_name=scenario.victim_name,
        bully_name=scenario.bully_name,
        prompt_classes=prompt_classes,
    )

    blocks: list[str] = []
    numbers: list[str] = []
    examples: list[str] = []
    class_names: list[str] = []
    counter = 1
    for candidate in candidates:
        for example in candidate.examples:
            blocks.append(
                templates.CLASSIFIER_EXAMPLE_BLOCK.format(
                    example_num=counter, example=example, class_name=candidate.label
                )
            )
            numbers.append(str(counter))
            examples.append(example)
            class_names.append(candidate.label)
            counter += 1
    numbers.append(str(counter))
    query = templates.CLASSIFIER_QUERY_BLOCK.format(
        example_num=counter, student_message_to_classify=message
    )

    sections = [header, templates.CLASSIFIER_NONE_RULE, *blocks, query]
    return PromptBundle(
        kind=PromptKind.BEHAVIOR_CLASSIFIER,
        rendered=templates.SECTION_SEPARATOR.join(sections),
        slots={
            "prompt_classes": prompt_classes,
            "example_num": tuple(numbers),
            "example": tuple(examples),
            "class_name": tuple(class_names),
            "student_message_to_classify": message,
        },
        template_version=templates.TEMPLATE_VERSION,
    )


def render_reaction_prompt(
    scenario: Scenario,
    parent_behavior: BehaviorNode,
    reaction: ReactionNode,
    context_text: str,
) -> PromptBundle:
    """Few-shot generation prompt pairing behavior examples with reaction examples.

    One pair per reaction example; when the parent behavior has fewer examples
    they are cycled, so every reaction example appears in the prompt.
    """
    if not reaction.examples:
        raise PromptInputError(
            f"reaction {reaction.node_id} has no examples", code="EMPTY_EXAMPLES"
        )
    if not parent_behavior.examples:
        raise PromptInputError(
            f"behavior {parent_behavior.node_id} has no examples", code="EMPTY_EXAMPLES"
        )
    if not context_text.strip():
        raise PromptInputError("context text is empty", code="EMPTY_CONTEXT")

    header = templates.REACTION_HEADER.format(
        bully_name=scenario.bully_name, victim_name=scenario.victim_name
    )
    blocks: list[str] = []
    numbers: list[str] = []
    contexts: list[str] = []
    responses: list[str] = []
    for i, response in enumerate(reaction.examples):
        context = parent_behavior.examples[i % len(parent_behavior.examples)]
        blocks.append(
            templates.REACTION_EXAMPLE_BLOCK.format(
                example_num=i + 1, context_example=context, response=response
            )
        )
        numbers.append(str(i + 1))
        contexts.append(context)
        responses.append(response)

    query = templates.REACTION_QUERY_BLOCK.format(student_message_to_answer=context_text)
    sections = [header, *blocks, templates.REACTION_CLOSING, query]
    return PromptBundle(
        kind=PromptKind.REACTION_GENERATOR,
        rendered=templates.SECTION_SEPARATOR.join(sections),
        slots={
            "example_num": tuple(numbers),
            "context_example": tuple(contexts),
            "response": tuple(responses),
            "student_message_to_answer": context_text,
        },
        template_version=templates.TEMPLATE_VERSION,
    )


def render_persona_prompt(
    spec: "PersonaSpec",
    scenario: Scenario,
    phase: PersonaPhase,
    comment: str | None = None,
    transcript_view: str | None = None,
) -> PromptBundle:
    """Persona prompt for suggesting a comment (before the chat) or a reply."""
    kind_key = spec.kind.value
    general_context = render_general_context(scenario)
    preamble = templates.PERSONA_PREAMBLE[kind_key].format(
        student_name=spec.student_name, general_context=general_context
    )

    if phase is PersonaPhase.COMMENT:
        instruction = templates.PERSONA_COMMENT_INSTRUCTION[kind_key].format(
            student_name=spec.student_name, victim_name=scenario.victim_name
        )
        return PromptBundle(
            kind=PromptKind.PERSONA_COMMENT,
            rendered=preamble + templates.SECTION_SEPARATOR + instruction,
            slots={"general_context": general_context},
            template_version=templates.TEMPLATE_VERSION,
        )

    if comment is None or not comment.strip():
        raise PromptInputError("reply phase needs the student's comment", code="MISSING_CONTEXT")
    if transcript_view is None or not transcript_view.strip():
        raise PromptInputError("reply phase needs the conversation so far", code="MISSING_CONTEXT")
    instruction = templates.PERSONA_REPLY_INSTRUCTION.format(
        comment=comment,
        messages=transcript_view,
        agreement=templates.PERSONA_AGREEMENT[kind_key],
        student_name=spec.student_name,
    )
    return PromptBundle(
        kind=PromptKind.PERSONA_REPLY,
        rendered=preamble + templates.SECTION_SEPARATOR + instruction,
        slots={
            "general_context": general_context,
            "comment": comment,
            "messages": transcript_view,
        },
        template_version=templates.TEMPLATE_VERSION,
    )
