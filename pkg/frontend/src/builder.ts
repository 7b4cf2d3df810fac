/**
 * Builder view: the node canvas plus an editor panel for the selected
 * component. Saving always round-trips through server-side validation;
 * violations render as badges anchored to the offending node and nothing
 * is persisted until the report is clean.
 */

import type { StudioApi } from "./api.js";
import { ApiError } from "./api.js";
import { CanvasGraph } from "./canvas.js";
import type { Violation } from "./types.js";

const NODE_WIDTH = 200;
const NODE_HEIGHT = 84;

export class BuilderView {
  readonly element: HTMLElement;
  private status: HTMLElement;
  private surface: HTMLElement;
  private panel: HTMLElement;
  private violationsByNode = new Map<string, Violation[]>();
  private documentViolations: Violation[] = [];

  constructor(
    private readonly canvas: CanvasGraph,
    private readonly api: StudioApi,
    private readonly confirmDialog: (message: string) => boolean = (m) => window.confirm(m),
  ) {
    this.element = el("div", "builder");
    const toolbar = el("div", "toolbar");
    toolbar.append(
      button("+ Student behavior", () => {
        const id = this.canvas.addBehavior({ asRoot: this.canvas.rootBehaviors.length === 0 });
        this.canvas.select(id);
        this.render();
      }),
      button("+ Chatbot reaction", () => {
        const id = this.canvas.addReaction();
        this.canvas.select(id);
        this.render();
      }),
      button("Auto-layout", () => {
        this.canvas.autoLayout();
        this.render();
      }),
      button("Validate", () => void this.validate()),
      button("Save", () => void this.save(), "primary"),
    );
    this.status = el("div", "status");
    toolbar.append(this.status);
    this.surface = el("div", "surface");
    this.panel = el("div", "panel");
    const body = el("div", "builder-body");
    body.append(this.surface, this.panel);
    this.element.append(toolbar, body);
    this.render();
  }

  /** Validate the current draft server-side; true when clean. */
  async validate(): Promise<boolean> {
    try {
      const violations = await this.api.validateDraft(this.canvas.designId, this.canvas.toJson());
      this.indexViolations(violations);
      this.setStatus(
        violations.length === 0 ? "No problems found." : `${violations.length} problem(s) found.`,
        violations.length === 0 ? "ok" : "bad",
      );
      this.render();
      return violations.length === 0;
    } catch (error) {
      this.setStatus(describe(error), "bad");
      return false;
    }
  }

  async save(): Promise<void> {
    const clean = await this.validate();
    if (!clean) return; // never persist a draft the server rejects
    try {
      const result = await this.api.putDesign(
        this.canvas.designId,
        this.canvas.toJson(),
        this.canvas.serverVersion ?? undefined,
      );
      this.canvas.markSaved(result.version);
      this.setStatus(`Saved version ${result.version}.`, "ok");
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        const overwrite = this.confirmDialog(
          "Someone saved a newer version of this design. Overwrite it with yours?",
        );
        if (overwrite) {
          const result = await this.api.putDesign(this.canvas.designId, this.canvas.toJson());
          this.canvas.markSaved(result.version);
          this.setStatus(`Saved version ${result.version} (overwrote newer copy).`, "ok");
          return;
        }
        this.setStatus("Save cancelled; reload to pick up the newer version.", "bad");
        return;
      }
      this.setStatus(describe(error), "bad");
    }
  }

  private indexViolations(violations: Violation[]): void {
    this.violationsByNode.clear();
    this.documentViolations = [];
    for (const violation of violations) {
      const match = violation.path.match(/^nodes\.([^.[]+)/);
      if (match) {
        const list = this.violationsByNode.get(match[1]) ?? [];
        list.push(violation);
        this.violationsByNode.set(match[1], list);
      } else {
        this.documentViolations.push(violation);
      }
    }
  }

  private setStatus(text: string, tone: "ok" | "bad" | "plain" = "plain"): void {
    this.status.textContent = text;
    this.status.className = `status ${tone}`;
  }

  render(): void {
    this.surface.replaceChildren();
    const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
    svg.classList.add("edges");
    for (const edge of this.canvas.edges()) {
      const from = this.canvas.nodes.get(edge.from)!;
      const to = this.canvas.nodes.get(edge.to)!;
      const line = document.createElementNS("http://www.w3.org/2000/svg", "line");
      line.setAttribute("x1", String(from.x + NODE_WIDTH));
      line.setAttribute("y1", String(from.y + NODE_HEIGHT / 2));
      line.setAttribute("x2", String(to.x));
      line.setAttribute("y2", String(to.y + NODE_HEIGHT / 2));
      svg.append(line);
    }
    this.surface.append(svg);

    for (const [id, node] of this.canvas.nodes) {
      const doc = node.doc;
      const card = el("div", `node ${doc.kind}`);
      card.dataset.nodeId = id;
      card.style.left = `${node.x}px`;
      card.style.top = `${node.y}px`;
      if (this.canvas.selection === id) card.classList.add("selected");
      const label = doc.kind === "behavior" ? doc.label : doc.instruction_label;
      const title = el("div", "node-label");
      title.textContent = label;
      card.append(title);
      const meta = el("div", "node-meta");
      meta.textContent =
        `${doc.examples.length} example(s)` +
        (this.canvas.rootBehaviors.includes(id) ? " · root" : "");
      card.append(meta);
      const violations = this.violationsByNode.get(id);
      if (violations !== undefined && violations.length > 0) {
        const badge = el("div", "badge");
        badge.textContent = violations.map((v) => v.code).join(", ");
        badge.title = violations.map((v) => `${v.code}: ${v.detail}`).join("\n");
        card.append(badge);
      }
      card.addEventListener("click", () => {
        this.canvas.select(id);
        this.render();
      });
      enableDrag(card, (x, y) => {
        this.canvas.moveNode(id, x, y);
        this.render();
      });
      this.surface.append(card);
    }

    if (this.documentViolations.length > 0) {
      const box = el("div", "doc-violations");
      for (const violation of this.documentViolations) {
        const row = el("div");
        row.textContent = `${violation.code} at ${violation.path}: ${violation.detail}`;
        box.append(row);
      }
      this.surface.append(box);
    }

    this.renderPanel();
  }

  private renderPanel(): void {
    this.panel.replaceChildren();
    const selected = this.canvas.selection;
    if (selected === null) {
      this.panel.append(this.scenarioEditor());
      return;
    }
    const node = this.canvas.nodes.get(selected);
    if (node === undefined) return;
    const doc = node.doc;

    const heading = el("h3");
    heading.textContent = doc.kind === "behavior" ? "Student behavior" : "Chatbot reaction";
    this.panel.append(heading);

    const labelInput = textInput(
      doc.kind === "behavior" ? doc.label : doc.instruction_label,
      (value) => this.canvas.setNodeLabel(selected, value),
    );
    this.panel.append(field(doc.kind === "behavior" ? "Behavior label" : "Instruction", labelInput));

    const chips = el("div", "chips");
    doc.examples.forEach((example, index) => {
      const chip = el("span", "chip");
      chip.textContent = example;
      const remove = el("button", "chip-remove");
      remove.textContent = "×";
      remove.addEventListener("click", () => {
        this.canvas.removeExample(selected, index);
        this.render();
      });
      chip.append(remove);
      chips.append(chip);
    });
    const addInput = document.createElement("input");
    addInput.placeholder =
      doc.kind === "behavior" ? "Example student message…" : "Example chatbot answer…";
    addInput.className = "chip-input";
    addInput.addEventListener("keydown", (event) => {
      if (event.key === "Enter" && addInput.value.trim()) {
        this.canvas.addExample(selected, addInput.value.trim());
        this.render();
      }
    });
    chips.append(addInput);
    this.panel.append(field("Examples", chips));

    const connect = el("div", "connect");
    for (const [otherId, other] of this.canvas.nodes) {
      if (otherId === selected) continue;
      if (doc.kind === other.doc.kind) continue;
      const target = other.doc.kind === "behavior" ? other.doc.label : other.doc.instruction_label;
      connect.append(
        button(`→ ${target}`, () => {
          this.canvas.connect(selected, otherId);
          this.render();
        }),
      );
    }
    this.panel.append(field("Connect to", connect));
    this.panel.append(
      button("Delete component", () => {
        this.canvas.removeNode(selected);
        this.render();
      }),
    );
  }

  private scenarioEditor(): HTMLElement {
    const box = el("div", "scenario-editor");
    const heading = el("h3");
    heading.textContent = "Scenario";
    box.append(heading);
    box.append(
      field("Design title", textInput(this.canvas.title, (v) => this.canvas.setTitle(v))),
      field(
        "Victim name",
        textInput(this.canvas.scenario.victim_name, (v) => this.canvas.setScenario({ victim_name: v })),
      ),
      field(
        "Bully name",
        textInput(this.canvas.scenario.bully_name, (v) => this.canvas.setScenario({ bully_name: v })),
      ),
      field(
        "Post text",
        textArea(this.canvas.scenario.post_text, (v) => this.canvas.setScenario({ post_text: v })),
      ),
      field(
        "Bully comment",
        textArea(this.canvas.scenario.bully_comment, (v) =>
          this.canvas.setScenario({ bully_comment: v }),
        ),
      ),
    );
    return box;
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return `${error.code}: ${error.detail}`;
  return String(error);
}

function el(tag: string, className?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  return node;
}

function button(label: string, onClick: () => void, className = ""): HTMLButtonElement {
  const node = document.createElement("button");
  node.textContent = label;
  node.className = className;
  node.addEventListener("click", onClick);
  return node;
}

function field(label: string, control: HTMLElement): HTMLElement {
  const wrap = el("label", "field");
  const caption = el("span", "field-label");
  caption.textContent = label;
  wrap.append(caption, control);
  return wrap;
}

function textInput(value: string, onChange: (value: string) => void): HTMLInputElement {
  const input = document.createElement("input");
  input.value = value;
  input.addEventListener("input", () => onChange(input.value));
  return input;
}

function textArea(value: string, onChange: (value: string) => void): HTMLTextAreaElement {
  const area = document.createElement("textarea");
  area.value = value;
  area.addEventListener("input", () => onChange(area.value));
  return area;
}

function enableDrag(card: HTMLElement, onMove: (x: number, y: number) => void): void {
  card.addEventListener("pointerdown", (down) => {
    if ((down.target as HTMLElement).tagName === "BUTTON") return;
    const startX = down.clientX - card.offsetLeft;
    const startY = down.clientY - card.offsetTop;
    const move = (event: PointerEvent) =>
      onMove(event.clientX - startX, event.clientY - startY);
    const up = () => {
      window.removeEventListener("pointermove", move);
      window.removeEventListener("pointerup", up);
    };
    window.addEventListener("pointermove", move);
    window.addEventListener("pointerup", up);
  });
}
