import { describe, expect, it } from "vitest";

import { CanvasGraph } from "../src/canvas.js";

function smallCanvas(): CanvasGraph {
  const canvas = new CanvasGraph({ designId: "d1" });
  canvas.addBehavior({ id: "b1", label: "If student reacts", asRoot: true });
  canvas.addExample("b1", "hey");
  canvas.addReaction({ id: "r1", label: "answer kindly" });
  canvas.addExample("r1", "hello");
  canvas.connect("b1", "r1");
  return canvas;
}

describe("CanvasGraph", () => {
  it("wires behavior to reaction and back", () => {
    const canvas = smallCanvas();
    canvas.addBehavior({ id: "b2", label: "If student asks" });
    canvas.addExample("b2", "why?");
    canvas.connect("r1", "b2");
    const doc = canvas.toDocument();
    const behavior = doc.nodes["b1"];
    const reaction = doc.nodes["r1"];
    expect(behavior.kind === "behavior" && behavior.reaction_child).toBe("r1");
    expect(reaction.kind === "reaction" && reaction.behavior_children).toEqual(["b2"]);
  });

  it("rejects same-kind connections", () => {
    const canvas = smallCanvas();
    canvas.addBehavior({ id: "b2", label: "another" });
    expect(() => canvas.connect("b1", "b2")).toThrow(/cannot connect/);
  });

  it("tracks the dirty flag across edits and saves", () => {
    const canvas = smallCanvas();
    expect(canvas.dirty).toBe(true);
    canvas.markSaved(3);
    expect(canvas.dirty).toBe(false);
    expect(canvas.serverVersion).toBe(3);
    canvas.setNodeLabel("b1", "If student cheers");
    expect(canvas.dirty).toBe(true);
  });

  it("lays nodes out left-to-right by depth", () => {
    const canvas = smallCanvas();
    canvas.addBehavior({ id: "b2", label: "If student asks" });
    canvas.connect("r1", "b2");
    canvas.autoLayout();
    const xs = ["b1", "r1", "b2"].map((id) => canvas.nodes.get(id)!.x);
    expect(xs[0]).toBeLessThan(xs[1]);
    expect(xs[1]).toBeLessThan(xs[2]);
  });

  it("keeps manual drag positions through auto-layout", () => {
    const canvas = smallCanvas();
    canvas.moveNode("r1", 555, 444);
    canvas.autoLayout();
    const node = canvas.nodes.get("r1")!;
    expect([node.x, node.y]).toEqual([555, 444]);
    expect(node.pinned).toBe(true);
  });

  it("removing a node also unlinks references to it", () => {
    const canvas = smallCanvas();
    canvas.removeNode("r1");
    const behavior = canvas.toDocument().nodes["b1"];
    expect(behavior.kind === "behavior" && behavior.reaction_child).toBeNull();
  });
});
