"""Persona suggestions: rule-table behavior, golden fidelity, statelessness."""

from __future__ import annotations

import pytest

from chainstage.errors import InvalidScenarioError, PromptInputError
from chainstage.engine.engine import ConversationEngine, EngineConfig
from chainstage.gateway.gateway import GatewayConfig, LlmGateway
from chainstage.gateway.mock import MockRule, MockRuleSet
from chainstage.gateway.types import Purpose
from chainstage.graph.model import Scenario
from chainstage.personas.sim import suggest_comment, suggest_reply
from chainstage.personas.spec import PersonaKind, PersonaSpec, Stance

from tests.conftest import CHATBOT_OPENERS, OPENING_COMMENTS, golden
from tests.ruletables import BALLET_RULES

PERSONA_RULES = MockRuleSet(
    rules=(
        MockRule(
            "contains",
            ("an aggressive student", "Give a comment that the student"),
            "Leslie ur so lame fr",
        ),
        MockRule(
            "contains",
            ("ignores the bullying", "Give a comment that the student"),
            "Can't wait to see your recital!!",
        ),
        MockRule(
            "contains",
            ("a supportive student", "Give a comment that the student"),
            "ur gonna be amazing Alex!!",
        ),
        MockRule(
            "contains",
            ("tend to not agree", "Give the next answer"),
            "nah the bot doesn't get it",
        ),
        MockRule(
            "contains",
            ("a supportive student", "tend to agree", "Give the next answer"),
            "yeah ur right, I'll check on Alex",
        ),
        MockRule(
            "contains",
            ("tend to agree", "Give the next answer"),
            "John: ok fair, I'll just watch the show",
        ),
    ),
    default_response="idk",
)


def persona_gateway() -> LlmGateway:
    return LlmGateway(GatewayConfig(provider="mock", mock_rules=PERSONA_RULES))


@pytest.fixture
def scenario(ballet_design) -> Scenario:
    return ballet_design.scenario


class TestSuggestComment:
    def test_aggressive(self, scenario):
        text = suggest_comment(PersonaSpec(PersonaKind.AGGRESSIVE), scenario, persona_gateway())
        assert text == "Leslie ur so lame fr"

    def test_passive(self, scenario):
        text = suggest_comment(PersonaSpec(PersonaKind.PASSIVE), scenario, persona_gateway())
        assert text == "Can't wait to see your recital!!"

    def test_invalid_scenario_rejected(self):
        broken = Scenario(scenario_id="s", post_text="  ", bully_comment="jab")
        with pytest.raises(InvalidScenarioError):
            suggest_comment(PersonaSpec(PersonaKind.PASSIVE), broken, persona_gateway())


class TestSuggestReply:
    TRANSCRIPT = (
        ("student", OPENING_COMMENTS["upstander"]),
        ("chatbot", CHATBOT_OPENERS["upstander"]),
    )

    def test_upstander_agrees(self, scenario):
        text = suggest_reply(
            PersonaSpec(PersonaKind.UPSTANDER),
            scenario,
            OPENING_COMMENTS["upstander"],
            self.TRANSCRIPT,
            persona_gateway(),
        )
        assert text == "yeah ur right, I'll check on Alex"

    def test_aggressive_disagrees(self, scenario):
        text = suggest_reply(
            PersonaSpec(PersonaKind.AGGRESSIVE),
            scenario,
            OPENING_COMMENTS["aggressive"],
            (("student", "x"), ("chatbot", "y")),
            persona_gateway(),
        )
        assert text == "nah the bot doesn't get it"

    def test_name_echo_stripped(self, scenario):
        text = suggest_reply(
            PersonaSpec(PersonaKind.PASSIVE),
            scenario,
            OPENING_COMMENTS["passive"],
            (("student", "x"), ("chatbot", "y")),
            persona_gateway(),
        )
        assert text == "ok fair, I'll just watch the show"

    def test_transcript_without_chatbot_turn_rejected(self, scenario):
        with pytest.raises(PromptInputError) as err:
            suggest_reply(
                PersonaSpec(PersonaKind.UPSTANDER),
                scenario,
                "hello",
                (("student", "only me"),),
                persona_gateway(),
            )
        assert err.value.code == "MISSING_CONTEXT"


class TestStanceDerivation:
    def test_only_aggressive_disagrees(self):
        assert PersonaSpec(PersonaKind.AGGRESSIVE).stance is Stance.DISAGREE
        assert PersonaSpec(PersonaKind.UPSTANDER).stance is Stance.AGREE
        assert PersonaSpec(PersonaKind.PASSIVE).stance is Stance.AGREE


class TestGatewayIntegration:
    @pytest.mark.parametrize("kind", list(PersonaKind))
    def test_comment_prompt_bytes_match_golden(self, scenario, kind):
        gateway = persona_gateway()
        suggest_comment(PersonaSpec(kind), scenario, gateway)
        (request,) = gateway.provider.requests
        assert request.prompt == golden(f"persona_{kind.value}_comment.txt")

    @pytest.mark.parametrize("kind", list(PersonaKind))
    def test_reply_prompt_bytes_match_golden(self, scenario, kind):
        gateway = persona_gateway()
        suggest_reply(
            PersonaSpec(kind),
            scenario,
            OPENING_COMMENTS[kind.value],
            (("chatbot", CHATBOT_OPENERS[kind.value]),),
            gateway,
        )
        (request,) = gateway.provider.requests
        assert request.prompt == golden(f"persona_{kind.value}_reply.txt")

    def test_all_persona_calls_tagged_persona(self, scenario):
        gateway = persona_gateway()
        suggest_comment(PersonaSpec(PersonaKind.UPSTANDER), scenario, gateway)
        suggest_reply(
            PersonaSpec(PersonaKind.UPSTANDER),
            scenario,
            "hello there",
            (("chatbot", "hi"),),
            gateway,
        )
        assert all(r.purpose is Purpose.PERSONA for r in gateway.provider.requests)

    def test_suggestions_leave_sessions_untouched(self, ballet_design, scenario):
        engine = ConversationEngine(
            LlmGateway(GatewayConfig(provider="mock", mock_rules=BALLET_RULES)),
            EngineConfig(),
        )
        session, _ = engine.start_session(
            ballet_design, "Leslie, shut up. Nobody cares about your opinion."
        )
        before = session.transcript_jsonl()
        suggest_reply(
            PersonaSpec(PersonaKind.UPSTANDER),
            scenario,
            "Leslie, shut up. Nobody cares about your opinion.",
            [(t.speaker.value, t.text) for t in session.transcript],
            persona_gateway(),
        )
        assert session.transcript_jsonl() == before
        assert session.fallback_count == 0
