"""Regenerate the packaged worked-example design document.

The ballet-recital design is the canonical fixture used by docs, tests, and
the frontend; run this after editing it here, then review the diff.
"""

from __future__ import annotations

from datetime import datetime, timezone
from pathlib import Path

from chainstage.graph.model import BehaviorNode, DialogueDesign, ReactionNode, Scenario
from chainstage.graph.serialization import serialize_design
from chainstage.graph.validation import validate_design

OUT = Path(__file__).resolve().parent.parent / "src" / "chainstage" / "data" / "ballet_design.json"

STAMP = datetime(2025, 3, 10, 14, 0, 0, tzinfo=timezone.utc)

SCENARIO = Scenario(
    scenario_id="01JP05NXR0HVNFWMA4CQK03X83",
    victim_name="Alex",
    bully_name="Leslie",
    post_text=(
        "Hi everyone! My first ballet recital is this Saturday at the community "
        "theater. I have been practicing for months and I am so excited. Come "
        "watch if you can!"
    ),
    bully_comment=(
        "Nobody wants to watch you dance, Alex. Ballet is so embarrassing, you "
        "will just trip over your own feet like always."
    ),
)

B_ATTACK = "01JP05NZPG692ENEWNHCW2N7VN"
R_REFLECT = "01JP05P0NRGQGW5E50XDCMP3R5"
B_AGREE = "01JP05P1N0DKJB686BMV358014"
R_SUPPORT = "01JP05P2M8CQDWF15358M5S05W"
B_PUSHBACK = "01JP05P3KGV2ZB5YSGDBTNAE16"
R_HARM = "01JP05P4JRXTTYSZ03EPDHN8XP"
B_SUPPORT = "01JP05P5J028CV7Y2P2NAFYF1F"
R_CONGRATS = "01JP05P6H8JNDSRYN3VYTVEN04"
B_IGNORE = "01JP05P7GGMWV1EXKS85BH42R8"
R_PERSPECTIVE = "01JP05P8FRV475GZEJX847YP44"

NODES = [
    BehaviorNode(
        node_id=B_ATTACK,
        label="If student bullies the bully",
        examples=(
            "Leslie, shut up. Nobody cares about your opinion.",
            "You're the embarrassing one here, Leslie.",
        ),
        reaction_child=R_REFLECT,
    ),
    ReactionNode(
        node_id=R_REFLECT,
        instruction_label="ask student to reflect",
        examples=(
            "Do you think attacking Leslie is the best way to handle this situation?",
            "I get that you want to help Alex, but could attacking Leslie make things worse?",
        ),
        behavior_children=(B_AGREE, B_PUSHBACK),
    ),
    BehaviorNode(
        node_id=B_AGREE,
        label="If student agrees",
        examples=(
            "Maybe not, but what else can I do?",
            "Yeah, you're right, that wasn't smart.",
        ),
        reaction_child=R_SUPPORT,
    ),
    ReactionNode(
        node_id=R_SUPPORT,
        instruction_label="suggest supporting the victim",
        examples=(
            "Instead of going after Leslie, you could send Alex a kind message. How do you think Alex is feeling right now?",
            "A good first step is checking in on Alex. Even a short supportive comment can mean a lot.",
        ),
    ),
    BehaviorNode(
        node_id=B_PUSHBACK,
        label="If student pushes back",
        examples=(
            "Leslie deserves it.",
            "Why should I be nice to a bully?",
        ),
        reaction_child=R_HARM,
    ),
    ReactionNode(
        node_id=R_HARM,
        instruction_label="explain why attacking makes it worse",
        examples=(
            "Fighting meanness with meanness usually makes the situation worse for everyone, especially Alex. What could you do for Alex instead?",
            "When comments turn into a fight, the original post gets buried and Alex feels even more alone. Supporting Alex works better.",
        ),
    ),
    BehaviorNode(
        node_id=B_SUPPORT,
        label="If student supports the victim",
        examples=(
            "Don't listen to Leslie, Alex. Your recital is going to be amazing!",
            "Alex, I think it's really cool that you do ballet.",
        ),
        reaction_child=R_CONGRATS,
    ),
    ReactionNode(
        node_id=R_CONGRATS,
        instruction_label="congratulates student",
        examples=(
            "That was really kind of you to stand up for Alex. How do you think your comment made Alex feel?",
            "Supporting Alex publicly takes courage. Nice work. What made you decide to speak up?",
        ),
    ),
    BehaviorNode(
        node_id=B_IGNORE,
        label="If student ignores the bullying",
        examples=(
            "Can't wait to see the recital!",
            "Good luck on Saturday!",
        ),
        reaction_child=R_PERSPECTIVE,
    ),
    ReactionNode(
        node_id=R_PERSPECTIVE,
        instruction_label="asks to take victim's perspective",
        examples=(
            "It's nice that you are excited about the show. Did you notice Leslie's comment? How do you think Alex felt reading it?",
            "Your comment was friendly. Imagine being Alex and reading what Leslie wrote. What might help Alex right now?",
        ),
    ),
]

DESIGN = DialogueDesign(
    design_id="01JP05NYQ82JEKN92VGK7E940K",
    title="Ballet recital bystander rehearsal",
    scenario=SCENARIO,
    root_behaviors=(B_ATTACK, B_SUPPORT, B_IGNORE),
    nodes={node.node_id: node for node in NODES},
    created_at=STAMP,
    updated_at=STAMP,
)


def main() -> None:
    report = validate_design(DESIGN)
    if not report.ok:
        raise SystemExit(f"fixture design is invalid: {report.to_dict()}")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(serialize_design(DESIGN), encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
