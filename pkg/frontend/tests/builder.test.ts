import { describe, expect, it } from "vitest";

import { StudioApi } from "../src/api.js";
import { BuilderView } from "../src/builder.js";
import { CanvasGraph } from "../src/canvas.js";
import { FakeServer } from "./fakes.js";

function brokenCanvas(): CanvasGraph {
  const canvas = new CanvasGraph({ designId: "d1" });
  canvas.addBehavior({ id: "b1", label: "If student reacts", asRoot: true });
  canvas.addExample("b1", "hey"); // no reaction child: server will flag it
  return canvas;
}

describe("BuilderView", () => {
  it("anchors validation badges to the offending node and never persists", async () => {
    const server = new FakeServer().json("POST", /\/designs\/d1\/validate$/, {
      violations: [
        { code: "MISSING_CHILD", path: "nodes.b1.reaction_child", detail: "behavior has no reaction" },
      ],
    });
    const api = new StudioApi("http://fake.test", server.fetch);
    const view = new BuilderView(brokenCanvas(), api);
    document.body.append(view.element);

    await view.save();

    const card = view.element.querySelector('[data-node-id="b1"]')!;
    expect(card.querySelector(".badge")?.textContent).toContain("MISSING_CHILD");
    expect(server.callsTo("PUT", /designs/)).toHaveLength(0);
    view.element.remove();
  });

  it("saves a clean design with the version precondition and clears dirty", async () => {
    const server = new FakeServer()
      .json("POST", /\/validate$/, { violations: [] })
      .json("PUT", /\/designs\/d1$/, { design_id: "d1", version: 4 });
    const api = new StudioApi("http://fake.test", server.fetch);
    const canvas = brokenCanvas();
    canvas.markSaved(3);
    canvas.setNodeLabel("b1", "If student cheers");
    const view = new BuilderView(canvas, api);

    await view.save();

    const put = server.callsTo("PUT", /designs/)[0];
    expect(put.headers["If-Match"]).toBe('"3"');
    expect(canvas.serverVersion).toBe(4);
    expect(canvas.dirty).toBe(false);
  });

  it("offers a conflict dialog on 409 and leaves state dirty when declined", async () => {
    const server = new FakeServer()
      .json("POST", /\/validate$/, { violations: [] })
      .json("PUT", /\/designs\/d1$/, { code: "VERSION_CONFLICT", detail: "stale" }, 409);
    const api = new StudioApi("http://fake.test", server.fetch);
    const canvas = brokenCanvas();
    canvas.markSaved(1);
    canvas.setNodeLabel("b1", "edited");
    let asked = false;
    const view = new BuilderView(canvas, api, (message) => {
      asked = message.includes("newer version");
      return false;
    });

    await view.save();

    expect(asked).toBe(true);
    expect(canvas.dirty).toBe(true);
    expect(canvas.serverVersion).toBe(1);
  });

  it("renders behavior and reaction nodes distinguishably", () => {
    const canvas = brokenCanvas();
    canvas.addReaction({ id: "r1", label: "answer kindly" });
    const server = new FakeServer();
    const view = new BuilderView(canvas, new StudioApi("http://fake.test", server.fetch));
    const behavior = view.element.querySelector('[data-node-id="b1"]')!;
    const reaction = view.element.querySelector('[data-node-id="r1"]')!;
    expect(behavior.classList.contains("behavior")).toBe(true);
    expect(reaction.classList.contains("reaction")).toBe(true);
  });
});
