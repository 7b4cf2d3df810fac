"""The conversation engine.

Each student message is classified against the behavior children of the
current position; a match generates the reply from the matched behavior's
reaction and advances. No match produces a fallback reply from the current
reaction's examples without advancing, keeping the rehearsal alive while the
gap stays visible. Past a leaf the engine stops classifying and keeps
generating from the leaf's instructions plus recent conversation. The engine
itself never terminates a session; turn caps belong to callers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable

from chainstage.errors import ChainstageError, InvalidDesignError, NotFoundError
from chainstage.engine.session import (
    ORIGIN_CONTINUATION,
    ORIGIN_FALLBACK,
    Position,
    PositionKind,
    SessionState,
    Speaker,
    StepMode,
    StepOutcome,
    Turn,
)
from chainstage.gateway.gateway import LlmGateway
from chainstage.gateway.types import Purpose
from chainstage.graph.model import BehaviorNode, DialogueDesign, ReactionNode
from chainstage.graph.validation import validate_design
from chainstage.ids import new_id
from chainstage.prompts.bundles import PromptBundle
from chainstage.prompts.parse import parse_class_decision
from chainstage.prompts.render import (
    render_classifier_prompt,
    render_reaction_prompt,
    render_transcript,
)

DEFAULT_NUDGE_EXAMPLES = (
    "That's one way to look at it. What do you think would actually help here?",
    "Interesting. How do you think the person being targeted feels right now?",
)

# Synthetic node ids for the root-fallback nudge; never stored in a design.
_NUDGE_REACTION_ID = "engine-nudge-reaction"
_NUDGE_BEHAVIOR_ID = "engine-nudge-context"


@dataclass(frozen=True)
class EngineConfig:
    continuation_window: int = 6  # transcript turns fed back past a leaf
    chatbot_name: str = "Chatbot"
    student_name: str = "Student"
    nudge_examples: tuple[str, ...] = DEFAULT_NUDGE_EXAMPLES
    clock: Callable[[], datetime] = field(
        default=lambda: datetime.now(timezone.utc)
    )
    id_factory: Callable[[], str] = field(default=new_id)


class ConversationEngine:
    def __init__(self, gateway: LlmGateway, config: EngineConfig | None = None):
        self.gateway = gateway
        self.config = config or EngineConfig()

    # -- public operations ----------------------------------------------

    def start_session(
        self, design: DialogueDesign, comment: str, *, session_id: str | None = None
    ) -> tuple[SessionState, StepOutcome]:
        session = SessionState(
            session_id=session_id or self.config.id_factory(),
            design_id=design.design_id,
            created_at=self.config.clock(),
        )
        outcome = self.open_session(design, session, comment)
        return session, outcome

    def open_session(
        self, design: DialogueDesign, session: SessionState, comment: str
    ) -> StepOutcome:
        """Route the triggering comment on a fresh (or freshly reset) session."""
        if session.started:
            raise ChainstageError(
                f"session {session.session_id} already has an opening comment",
                code="ALREADY_STARTED",
            )
        report = validate_design(design)
        if not report.ok:
            raise InvalidDesignError(
                f"design {design.design_id} has {len(report.violations)} violations"
            )
        if not comment.strip():
            raise ChainstageError("comment must not be empty", code="EMPTY_COMMENT")
        return self._route_and_reply(design, session, comment, candidates=self._roots(design))

    def step(self, design: DialogueDesign, session: SessionState, message: str) -> StepOutcome:
        if not session.started:
            raise NotFoundError(
                f"session {session.session_id} has no opening comment yet",
                code="SESSION_NOT_STARTED",
            )
        if not message.strip():
            raise ChainstageError("message must not be empty", code="EMPTY_MESSAGE")

        position = session.position
        if position.kind is PositionKind.LEAF_CONTINUATION:
            return self._continue_past_leaf(design, session, message)
        if position.kind is PositionKind.AT_ROOT:
            candidates = self._roots(design)
        else:
            reaction = design.reaction(position.node_id)
            candidates = [design.behavior(b) for b in reaction.behavior_children]
        return self._route_and_reply(design, session, message, candidates=candidates)

    def reset_session(self, session: SessionState) -> SessionState:
        session.transcript.clear()
        session.position = Position(PositionKind.AWAITING_COMMENT)
        session.fallback_count = 0
        return session

    # -- internals --------------------------------------------------------

    def _roots(self, design: DialogueDesign) -> list[BehaviorNode]:
        return [design.behavior(b) for b in design.root_behaviors]

    def _route_and_reply(
        self,
        design: DialogueDesign,
        session: SessionState,
        message: str,
        candidates: list[BehaviorNode],
    ) -> StepOutcome:
        classifier = render_classifier_prompt(design.scenario, candidates, message)
        decision = parse_class_decision(
            self.gateway.complete(classifier.rendered, Purpose.CLASSIFY).text,
            [c.label for c in candidates],
        )

        if decision.matched is None:
            return self._fallback(design, session, message, classifier)

        matched = next(c for c in candidates if c.label == decision.matched)
        reaction = design.reaction(matched.reaction_child)
        generator = render_reaction_prompt(design.scenario, matched, reaction, message)
        reply = self.gateway.complete(generator.rendered, Purpose.GENERATE).text.strip()

        new_position = Position(
            PositionKind.LEAF_CONTINUATION if reaction.is_leaf else PositionKind.AT_REACTION,
            reaction.node_id,
        )
        self._commit(session, message, reply, reaction.node_id, new_position)
        return StepOutcome(
            reply=reply,
            route=matched.label,
            mode=StepMode.ROUTED,
            prompt_audit=(classifier, generator),
        )

    def _fallback(
        self,
        design: DialogueDesign,
        session: SessionState,
        message: str,
        classifier: PromptBundle,
    ) -> StepOutcome:
        parent, reaction = self._fallback_nodes(design, session, message)
        generator = render_reaction_prompt(design.scenario, parent, reaction, message)
        reply = self.gateway.complete(generator.rendered, Purpose.GENERATE).text.strip()

        new_position = session.position
        if new_position.kind is PositionKind.AWAITING_COMMENT:
            new_position = Position(PositionKind.AT_ROOT)
        self._commit(session, message, reply, ORIGIN_FALLBACK, new_position)
        session.fallback_count += 1
        return StepOutcome(
            reply=reply,
            route=None,
            mode=StepMode.FALLBACK,
            prompt_audit=(classifier, generator),
        )

    def _fallback_nodes(
        self, design: DialogueDesign, session: SessionState, message: str
    ) -> tuple[BehaviorNode, ReactionNode]:
        """Regenerate from the current reaction; at the root, from the
        configured opening nudge paired with the unmatched message."""
        if session.position.kind is PositionKind.AT_REACTION:
            reaction = design.reaction(session.position.node_id)
            parent = design.parent_behavior_of(reaction.node_id)
            if parent is not None:
                return parent, reaction
        else:
            reaction = ReactionNode(
                node_id=_NUDGE_REACTION_ID,
                instruction_label="re-engage the student",
                examples=self.config.nudge_examples,
            )
        parent = BehaviorNode(
            node_id=_NUDGE_BEHAVIOR_ID,
            label="unmatched student message",
            examples=(message,),
            reaction_child=reaction.node_id,
        )
        return parent, reaction

    def _continue_past_leaf(
        self, design: DialogueDesign, session: SessionState, message: str
    ) -> StepOutcome:
        leaf = design.reaction(session.position.node_id)
        parent = design.parent_behavior_of(leaf.node_id)
        if parent is None:  # unreachable in a valid design
            raise InvalidDesignError(f"leaf {leaf.node_id} has no parent behavior")
        tail = session.transcript[-self.config.continuation_window :]
        context_text = render_transcript(
            [(t.speaker.value, t.text) for t in tail]
            + [(Speaker.STUDENT.value, message)],
            chatbot_name=self.config.chatbot_name,
            student_name=self.config.student_name,
        )
        generator = render_reaction_prompt(design.scenario, parent, leaf, context_text)
        reply = self.gateway.complete(generator.rendered, Purpose.GENERATE).text.strip()
        self._commit(session, message, reply, ORIGIN_CONTINUATION, session.position)
        return StepOutcome(
            reply=reply,
            route=None,
            mode=StepMode.CONTINUATION,
            prompt_audit=(generator,),
        )

    def _commit(
        self,
        session: SessionState,
        message: str,
        reply: str,
        origin: str,
        position: Position,
    ) -> None:
        """Apply a fully computed step. Runs only after all provider calls
        succeeded, which is what makes each step atomic."""
        now = self.config.clock()
        session.transcript.append(
            Turn(speaker=Speaker.STUDENT, text=message, origin=None, ts=now)
        )
        session.transcript.append(
            Turn(speaker=Speaker.CHATBOT, text=reply, origin=origin, ts=now)
        )
        session.position = position
