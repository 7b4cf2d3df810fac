/**
 * Client-side mirror of one design: nodes with screen positions, selection,
 * a dirty flag, and the server version the document was loaded at.
 *
 * The canvas only wires components together mechanically; whether the tree
 * is actually sound is the server's call (validate before every save).
 * Screen positions are ephemeral layout state and never leave the browser.
 */

import { buildDocument, toCanonicalJson } from "./document.js";
import type { DesignDocument, NodeDoc, Scenario } from "./types.js";

export interface CanvasNode {
  doc: NodeDoc;
  x: number;
  y: number;
  pinned: boolean; // manually dragged; auto-layout leaves it alone
}

const COLUMN_WIDTH = 240;
const ROW_HEIGHT = 120;

function newLocalId(): string {
  // sortable opaque id in the same shape the server mints
  const alphabet = "0123456789ABCDEFGHJKMNPQRSTVWXYZ";
  const time = Date.now();
  let head = "";
  let value = time;
  for (let i = 0; i < 10; i++) {
    head = alphabet[value % 32] + head;
    value = Math.floor(value / 32);
  }
  let tail = "";
  for (let i = 0; i < 16; i++) {
    tail += alphabet[Math.floor(Math.random() * 32)];
  }
  return head + tail;
}

function nowStamp(): string {
  return new Date().toISOString().replace(/\.\d{3}Z$/, "Z");
}

export class CanvasGraph {
  designId: string;
  title = "Untitled design";
  scenario: Scenario;
  rootBehaviors: string[] = [];
  nodeOrder: string[] = [];
  nodes = new Map<string, CanvasNode>();
  selection: string | null = null;
  dirty = false;
  serverVersion: number | null = null;
  createdAt: string;
  updatedAt: string;

  constructor(opts: { designId?: string; idFactory?: () => string } = {}) {
    this.idFactory = opts.idFactory ?? newLocalId;
    this.designId = opts.designId ?? this.idFactory();
    this.createdAt = nowStamp();
    this.updatedAt = this.createdAt;
    this.scenario = {
      scenario_id: this.idFactory(),
      victim_name: "Alex",
      bully_name: "Leslie",
      post_text: "",
      bully_comment: "",
    };
  }

  private readonly idFactory: () => string;

  private touch(): void {
    this.dirty = true;
  }

  // -- authoring operations (what builder gestures call) -----------------

  setTitle(title: string): void {
    this.title = title;
    this.touch();
  }

  setScenario(scenario: Partial<Scenario>): void {
    this.scenario = { ...this.scenario, ...scenario };
    this.touch();
  }

  setTimestamps(createdAt: string, updatedAt: string): void {
    this.createdAt = createdAt;
    this.updatedAt = updatedAt;
    this.touch();
  }

  addBehavior(opts: { id?: string; label?: string; examples?: string[]; asRoot?: boolean } = {}): string {
    const id = opts.id ?? this.idFactory();
    this.nodes.set(id, {
      doc: {
        kind: "behavior",
        node_id: id,
        label: opts.label ?? "If student ...",
        examples: opts.examples ?? [],
        reaction_child: null,
      },
      x: 0,
      y: this.nodeOrder.length * ROW_HEIGHT,
      pinned: false,
    });
    this.nodeOrder.push(id);
    if (opts.asRoot ?? false) this.rootBehaviors.push(id);
    this.touch();
    return id;
  }

  addReaction(opts: { id?: string; label?: string; examples?: string[] } = {}): string {
    const id = opts.id ?? this.idFactory();
    this.nodes.set(id, {
      doc: {
        kind: "reaction",
        node_id: id,
        instruction_label: opts.label ?? "chatbot should ...",
        examples: opts.examples ?? [],
        behavior_children: [],
      },
      x: COLUMN_WIDTH,
      y: this.nodeOrder.length * ROW_HEIGHT,
      pinned: false,
    });
    this.nodeOrder.push(id);
    this.touch();
    return id;
  }

  /** Wire parent -> child following the alternation the node kinds imply. */
  connect(parentId: string, childId: string): void {
    const parent = this.mustGet(parentId).doc;
    const child = this.mustGet(childId).doc;
    if (parent.kind === "behavior" && child.kind === "reaction") {
      parent.reaction_child = childId;
    } else if (parent.kind === "reaction" && child.kind === "behavior") {
      if (!parent.behavior_children.includes(childId)) {
        parent.behavior_children.push(childId);
      }
    } else {
      throw new Error(`cannot connect ${parent.kind} to ${child.kind}`);
    }
    this.touch();
  }

  disconnect(parentId: string, childId: string): void {
    const parent = this.mustGet(parentId).doc;
    if (parent.kind === "behavior") {
      if (parent.reaction_child === childId) parent.reaction_child = null;
    } else {
      parent.behavior_children = parent.behavior_children.filter((c) => c !== childId);
    }
    this.touch();
  }

  removeNode(nodeId: string): void {
    this.nodes.delete(nodeId);
    this.nodeOrder = this.nodeOrder.filter((n) => n !== nodeId);
    this.rootBehaviors = this.rootBehaviors.filter((n) => n !== nodeId);
    for (const { doc } of this.nodes.values()) {
      if (doc.kind === "behavior" && doc.reaction_child === nodeId) {
        doc.reaction_child = null;
      } else if (doc.kind === "reaction") {
        doc.behavior_children = doc.behavior_children.filter((c) => c !== nodeId);
      }
    }
    if (this.selection === nodeId) this.selection = null;
    this.touch();
  }

  setNodeLabel(nodeId: string, label: string): void {
    const doc = this.mustGet(nodeId).doc;
    if (doc.kind === "behavior") doc.label = label;
    else doc.instruction_label = label;
    this.touch();
  }

  addExample(nodeId: string, text: string): void {
    this.mustGet(nodeId).doc.examples.push(text);
    this.touch();
  }

  removeExample(nodeId: string, index: number): void {
    this.mustGet(nodeId).doc.examples.splice(index, 1);
    this.touch();
  }

  select(nodeId: string | null): void {
    this.selection = nodeId;
  }

  moveNode(nodeId: string, x: number, y: number): void {
    const node = this.mustGet(nodeId);
    node.x = x;
    node.y = y;
    node.pinned = true; // drag overrides auto-layout, client-side only
  }

  // -- document round trip ------------------------------------------------

  toDocument(): DesignDocument {
    const nodes = new Map<string, NodeDoc>();
    for (const [id, node] of this.nodes) nodes.set(id, node.doc);
    return buildDocument({
      designId: this.designId,
      title: this.title,
      scenario: this.scenario,
      rootBehaviors: this.rootBehaviors,
      nodeOrder: this.nodeOrder,
      nodes,
      createdAt: this.createdAt,
      updatedAt: this.updatedAt,
    });
  }

  toJson(): string {
    return toCanonicalJson(this.toDocument());
  }

  loadDocument(document: DesignDocument, serverVersion: number): void {
    this.designId = document.design_id;
    this.title = document.title;
    this.scenario = { ...document.scenario };
    this.rootBehaviors = [...document.root_behaviors];
    this.nodeOrder = Object.keys(document.nodes);
    this.nodes = new Map(
      this.nodeOrder.map((id) => [
        id,
        { doc: structuredClone(document.nodes[id]), x: 0, y: 0, pinned: false },
      ]),
    );
    this.createdAt = document.created_at;
    this.updatedAt = document.updated_at;
    this.serverVersion = serverVersion;
    this.selection = null;
    this.dirty = false;
    this.autoLayout();
  }

  markSaved(version: number): void {
    this.serverVersion = version;
    this.dirty = false;
  }

  // -- layout: layered left-to-right, roots first --------------------------

  depths(): Map<string, number> {
    const depth = new Map<string, number>();
    const visit = (id: string, level: number) => {
      if (depth.has(id) || !this.nodes.has(id)) return;
      depth.set(id, level);
      const doc = this.mustGet(id).doc;
      if (doc.kind === "behavior") {
        if (doc.reaction_child !== null) visit(doc.reaction_child, level + 1);
      } else {
        for (const child of doc.behavior_children) visit(child, level + 1);
      }
    };
    for (const root of this.rootBehaviors) visit(root, 0);
    return depth;
  }

  autoLayout(): void {
    const depth = this.depths();
    const rowByColumn = new Map<number, number>();
    const place = (id: string) => {
      const node = this.nodes.get(id);
      if (node === undefined || node.pinned) return;
      const column = depth.get(id) ?? 0;
      const row = rowByColumn.get(column) ?? 0;
      rowByColumn.set(column, row + 1);
      node.x = 40 + column * COLUMN_WIDTH;
      node.y = 40 + row * ROW_HEIGHT;
    };
    const seen = new Set<string>();
    const walk = (id: string) => {
      if (seen.has(id) || !this.nodes.has(id)) return;
      seen.add(id);
      place(id);
      const doc = this.mustGet(id).doc;
      if (doc.kind === "behavior") {
        if (doc.reaction_child !== null) walk(doc.reaction_child);
      } else {
        for (const child of doc.behavior_children) walk(child);
      }
    };
    for (const root of this.rootBehaviors) walk(root);
    for (const id of this.nodeOrder) walk(id); // anything unreached still gets a spot
  }

  edges(): Array<{ from: string; to: string }> {
    const out: Array<{ from: string; to: string }> = [];
    for (const [id, node] of this.nodes) {
      const doc = node.doc;
      if (doc.kind === "behavior") {
        if (doc.reaction_child !== null && this.nodes.has(doc.reaction_child)) {
          out.push({ from: id, to: doc.reaction_child });
        }
      } else {
        for (const child of doc.behavior_children) {
          if (this.nodes.has(child)) out.push({ from: id, to: child });
        }
      }
    }
    return out;
  }

  private mustGet(nodeId: string): CanvasNode {
    const node = this.nodes.get(nodeId);
    if (node === undefined) throw new Error(`unknown node ${nodeId}`);
    return node;
  }
}
