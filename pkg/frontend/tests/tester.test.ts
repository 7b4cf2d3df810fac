import { describe, expect, it } from "vitest";

import { StudioApi } from "../src/api.js";
import { TesterView } from "../src/tester.js";
import type { Scenario } from "../src/types.js";
import { FakeServer } from "./fakes.js";

const SCENARIO: Scenario = {
  scenario_id: "s1",
  victim_name: "Alex",
  bully_name: "Leslie",
  post_text: "My first ballet recital is this Saturday!",
  bully_comment: "Nobody wants to watch you dance, Alex.",
};

const OPENER = "Do you think attacking Leslie is the best way to handle this situation?";

function sessionEnvelope(reply: string, sessionId = "sess1") {
  return {
    session: {
      session_id: sessionId,
      design_id: "d1",
      design_version: 1,
      position: { kind: "at_reaction", node_id: "r1" },
      fallback_count: 0,
      student_turns: 1,
    },
    outcome: { reply, route: "If student bullies the bully", mode: "routed" },
  };
}

function makeTester(server: FakeServer): TesterView {
  const api = new StudioApi("http://fake.test", server.fetch);
  const view = new TesterView(api, "d1", SCENARIO);
  document.body.append(view.element);
  return view;
}

describe("TesterView", () => {
  it("stages the post, the bully comment, and a comment box", () => {
    const view = makeTester(new FakeServer());
    expect(view.element.querySelector(".post-body")?.textContent).toBe(SCENARIO.post_text);
    expect(view.element.querySelector(".bully-comment")?.textContent).toContain(
      SCENARIO.bully_comment,
    );
    expect(view.element.querySelector(".comment-form input")).not.toBeNull();
    expect((view.element.querySelector(".chat-window") as HTMLElement).hidden).toBe(true);
    view.element.remove();
  });

  it("opens the docked chat with the chatbot opener after a comment", async () => {
    const server = new FakeServer().json("POST", /^\/sessions$/, sessionEnvelope(OPENER), 201);
    const view = makeTester(server);
    const input = view.element.querySelector(".comment-form input") as HTMLInputElement;
    input.value = "Leslie, shut up. Nobody cares about your opinion.";
    await view.submitComment();

    const chat = view.element.querySelector(".chat-window") as HTMLElement;
    expect(chat.hidden).toBe(false);
    expect(view.element.querySelector(".chat-header")?.textContent).toBe("Social Media Co-Pilot");
    const bubbles = [...view.element.querySelectorAll(".bubble")].map((b) => b.textContent);
    expect(bubbles).toEqual([
      "Leslie, shut up. Nobody cares about your opinion.",
      OPENER,
    ]);
    view.element.remove();
  });

  it("persona chips insert a suggestion without sending", async () => {
    const server = new FakeServer().json("POST", /suggest-comment$/, {
      persona: "aggressive",
      text: "Leslie ur so lame fr",
    });
    const view = makeTester(server);
    await view.insertSuggestion("aggressive");

    const input = view.element.querySelector(".comment-form input") as HTMLInputElement;
    expect(input.value).toBe("Leslie ur so lame fr");
    expect(server.callsTo("POST", /^\/sessions/)).toHaveLength(0); // nothing was sent
    view.element.remove();
  });

  it("fetches reply suggestions per turn once the chat is open", async () => {
    const server = new FakeServer()
      .json("POST", /^\/sessions$/, sessionEnvelope(OPENER), 201)
      .json("GET", /suggestions\?persona=upstander$/, {
        persona: "upstander",
        text: "yeah ur right, I'll check on Alex",
      });
    const view = makeTester(server);
    (view.element.querySelector(".comment-form input") as HTMLInputElement).value = "hi";
    await view.submitComment();
    await view.insertSuggestion("upstander");

    const chatInput = view.element.querySelector(".chat-controls input") as HTMLInputElement;
    expect(chatInput.value).toBe("yeah ur right, I'll check on Alex");
    expect(server.callsTo("POST", /messages$/)).toHaveLength(0);
    view.element.remove();
  });

  it("reset clears the chat through the API", async () => {
    const server = new FakeServer()
      .json("POST", /^\/sessions$/, sessionEnvelope(OPENER), 201)
      .json("POST", /reset$/, { session: sessionEnvelope("").session, outcome: null });
    const view = makeTester(server);
    (view.element.querySelector(".comment-form input") as HTMLInputElement).value = "hi";
    await view.submitComment();
    expect(view.element.querySelectorAll(".bubble")).toHaveLength(2);

    await view.reset();

    expect(server.callsTo("POST", /reset$/)).toHaveLength(1);
    expect(view.element.querySelectorAll(".bubble")).toHaveLength(0);
    expect((view.element.querySelector(".chat-window") as HTMLElement).hidden).toBe(true);
    expect(view.sessionId).toBeNull();
    view.element.remove();
  });
});
