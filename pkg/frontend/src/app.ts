/**
 * App shell: Builder/Tester tabs over one design. Switching away from the
 * builder with unsaved edits asks first, so round-tripping between the two
 * screens never silently drops work.
 */

import { StudioApi } from "./api.js";
import { BuilderView } from "./builder.js";
import { CanvasGraph } from "./canvas.js";
import { TesterView } from "./tester.js";
import type { DesignDocument } from "./types.js";

export class StudioApp {
  readonly element: HTMLElement;
  readonly canvas: CanvasGraph;
  readonly builder: BuilderView;
  tester: TesterView | null = null;
  private active: "builder" | "tester" = "builder";
  private body: HTMLElement;
  private tabs: Record<string, HTMLButtonElement>;

  constructor(
    private readonly api: StudioApi,
    private readonly confirmDialog: (message: string) => boolean = (m) => window.confirm(m),
  ) {
    this.canvas = new CanvasGraph();
    this.builder = new BuilderView(this.canvas, api, confirmDialog);
    this.element = document.createElement("div");
    this.element.className = "studio";
    const bar = document.createElement("nav");
    bar.className = "tabs";
    this.tabs = {
      builder: tab("Chatbot Builder", () => this.show("builder")),
      tester: tab("Chatbot Tester", () => void this.show("tester")),
    };
    bar.append(this.tabs.builder, this.tabs.tester);
    this.body = document.createElement("div");
    this.body.className = "view";
    this.element.append(bar, this.body);
    this.show("builder");
  }

  async loadDesign(designId: string): Promise<void> {
    const { text, version } = await this.api.getDesignText(designId);
    const document = JSON.parse(text) as DesignDocument;
    this.canvas.loadDocument(document, version);
    this.builder.render();
  }

  show(view: "builder" | "tester"): void {
    if (view === "tester" && this.active === "builder" && this.canvas.dirty) {
      const proceed = this.confirmDialog(
        "You have unsaved changes in the builder. Switch to the tester anyway?",
      );
      if (!proceed) return;
    }
    this.active = view;
    this.tabs.builder.classList.toggle("active", view === "builder");
    this.tabs.tester.classList.toggle("active", view === "tester");
    this.body.replaceChildren();
    if (view === "builder") {
      this.body.append(this.builder.element);
      this.builder.render();
    } else {
      // the tester always stages the design as currently authored
      if (this.tester === null) {
        this.tester = new TesterView(this.api, this.canvas.designId, this.canvas.scenario);
      } else {
        this.tester.setScenario(this.canvas.scenario);
      }
      this.body.append(this.tester.element);
    }
  }
}

function tab(label: string, onClick: () => void): HTMLButtonElement {
  const node = document.createElement("button");
  node.textContent = label;
  node.className = "tab";
  node.addEventListener("click", onClick);
  return node;
}
