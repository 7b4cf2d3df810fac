/**
 * Canonical document assembly. Key order and formatting must match the
 * server's canonical form exactly (two-space indent, LF, trailing newline),
 * so an unchanged round trip is byte-identical.
 */

import type { DesignDocument, NodeDoc, Scenario } from "./types.js";

export function canonicalScenario(scenario: Scenario): Scenario {
  const out: Scenario = {
    scenario_id: scenario.scenario_id,
    victim_name: scenario.victim_name,
    bully_name: scenario.bully_name,
    post_text: scenario.post_text,
    bully_comment: scenario.bully_comment,
  };
  if (scenario.post_image_note !== undefined) {
    out.post_image_note = scenario.post_image_note;
  }
  return out;
}

export function canonicalNode(node: NodeDoc): NodeDoc {
  if (node.kind === "behavior") {
    return {
      kind: "behavior",
      node_id: node.node_id,
      label: node.label,
      examples: [...node.examples],
      reaction_child: node.reaction_child,
    };
  }
  return {
    kind: "reaction",
    node_id: node.node_id,
    instruction_label: node.instruction_label,
    examples: [...node.examples],
    behavior_children: [...node.behavior_children],
  };
}

export function buildDocument(parts: {
  designId: string;
  title: string;
  scenario: Scenario;
  rootBehaviors: string[];
  nodeOrder: string[];
  nodes: Map<string, NodeDoc>;
  createdAt: string;
  updatedAt: string;
}): DesignDocument {
  const nodes: Record<string, NodeDoc> = {};
  for (const nodeId of parts.nodeOrder) {
    const node = parts.nodes.get(nodeId);
    if (node === undefined) throw new Error(`unknown node in order: ${nodeId}`);
    nodes[nodeId] = canonicalNode(node);
  }
  return {
    schema: "chainstage/1",
    design_id: parts.designId,
    title: parts.title,
    scenario: canonicalScenario(parts.scenario),
    root_behaviors: [...parts.rootBehaviors],
    nodes,
    created_at: parts.createdAt,
    updated_at: parts.updatedAt,
  };
}

export function toCanonicalJson(document: DesignDocument): string {
  return JSON.stringify(document, null, 2) + "\n";
}
