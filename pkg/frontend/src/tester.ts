/**
 * Tester view: the scenario staged as a social-media post with a comment
 * box. Submitting a comment starts a rehearsal session and docks the chat
 * window on the right. Persona chips fetch one suggestion each and insert
 * it into the active input without sending, so the teacher can edit first.
 */

import type { StudioApi } from "./api.js";
import { ApiError } from "./api.js";
import type { Persona, Scenario } from "./types.js";
import { PERSONAS } from "./types.js";

export class TesterView {
  readonly element: HTMLElement;
  sessionId: string | null = null;
  private post: HTMLElement;
  private commentForm: HTMLElement;
  private commentInput: HTMLInputElement;
  private chat: HTMLElement;
  private chatLog: HTMLElement;
  private chatInput: HTMLInputElement;
  private chipsRow: HTMLElement;
  private status: HTMLElement;

  constructor(
    private readonly api: StudioApi,
    private readonly designId: string,
    private scenario: Scenario,
  ) {
    this.element = el("div", "tester");
    this.post = el("div", "post-card");
    this.commentInput = input("Write a comment…");
    this.commentForm = el("div", "comment-form");
    this.chat = el("aside", "chat-window");
    this.chat.hidden = true;
    this.chatLog = el("div", "chat-log");
    this.chatInput = input("Answer the chatbot…");
    this.chipsRow = el("div", "chips-row");
    this.status = el("div", "status");
    this.build();
  }

  setScenario(scenario: Scenario): void {
    this.scenario = scenario;
    this.renderPost();
  }

  private build(): void {
    const feed = el("div", "feed");
    this.renderPost();
    const commentButton = button("Comment", () => void this.submitComment(), "primary");
    this.commentForm.append(this.commentInput, commentButton);
    feed.append(this.post, this.commentForm, this.chipsRow, this.status);

    const header = el("header", "chat-header");
    header.textContent = "Social Media Co-Pilot";
    const sendButton = button("Send", () => void this.sendMessage(), "primary");
    const resetButton = button("Reset", () => void this.reset());
    const controls = el("div", "chat-controls");
    controls.append(this.chatInput, sendButton, resetButton);
    this.chat.append(header, this.chatLog, controls);

    this.renderChips();
    this.element.append(feed, this.chat);
  }

  private renderPost(): void {
    this.post.replaceChildren();
    const author = el("div", "post-author");
    author.textContent = `${this.scenario.victim_name} · victim`;
    const body = el("p", "post-body");
    body.textContent = this.scenario.post_text;
    const comment = el("div", "bully-comment");
    const bully = el("span", "bully-name");
    bully.textContent = `${this.scenario.bully_name} · bully`;
    const text = el("p");
    text.textContent = this.scenario.bully_comment;
    comment.append(bully, text);
    this.post.append(author, body, comment);
    if (this.scenario.post_image_note) {
      const note = el("div", "image-note");
      note.textContent = `📷 ${this.scenario.post_image_note}`;
      this.post.append(note);
    }
  }

  private renderChips(): void {
    this.chipsRow.replaceChildren();
    const caption = el("span", "chips-caption");
    caption.textContent = "Student simulations:";
    this.chipsRow.append(caption);
    for (const persona of PERSONAS) {
      this.chipsRow.append(
        button(persona, () => void this.insertSuggestion(persona), "chip-button"),
      );
    }
  }

  /** Fetch one suggestion and insert it into the active input. Never sends. */
  async insertSuggestion(persona: Persona): Promise<void> {
    try {
      const text =
        this.sessionId === null
          ? await this.api.suggestComment(this.designId, persona)
          : await this.api.getSuggestion(this.sessionId, persona);
      const target = this.sessionId === null ? this.commentInput : this.chatInput;
      target.value = text;
      target.focus();
    } catch (error) {
      this.report(error);
    }
  }

  async submitComment(): Promise<void> {
    const comment = this.commentInput.value.trim();
    if (!comment) return;
    try {
      const envelope =
        this.sessionId === null
          ? await this.api.startSession(this.designId, comment)
          : await this.api.postMessage(this.sessionId, comment);
      this.sessionId = envelope.session.session_id;
      this.commentInput.value = "";
      this.appendTurn("student", comment);
      if (envelope.outcome) this.appendTurn("chatbot", envelope.outcome.reply);
      this.chat.hidden = false;
      this.commentForm.classList.add("sent");
      this.status.textContent = "";
    } catch (error) {
      this.report(error);
    }
  }

  async sendMessage(): Promise<void> {
    if (this.sessionId === null) return;
    const text = this.chatInput.value.trim();
    if (!text) return;
    try {
      const envelope = await this.api.postMessage(this.sessionId, text);
      this.chatInput.value = "";
      this.appendTurn("student", text);
      if (envelope.outcome) this.appendTurn("chatbot", envelope.outcome.reply);
      this.status.textContent = "";
    } catch (error) {
      this.report(error);
    }
  }

  /** Reset through the API, then clear the docked chat back to the comment phase. */
  async reset(): Promise<void> {
    if (this.sessionId === null) return;
    try {
      await this.api.resetSession(this.sessionId);
      this.chatLog.replaceChildren();
      this.chat.hidden = true;
      this.commentForm.classList.remove("sent");
      this.sessionId = null; // next comment starts a fresh rehearsal
      this.status.textContent = "Conversation reset.";
    } catch (error) {
      this.report(error);
    }
  }

  private appendTurn(speaker: "student" | "chatbot", text: string): void {
    const bubble = el("div", `bubble ${speaker}`);
    bubble.textContent = text;
    this.chatLog.append(bubble);
    this.chatLog.scrollTop = this.chatLog.scrollHeight;
  }

  private report(error: unknown): void {
    this.status.textContent =
      error instanceof ApiError ? `${error.code}: ${error.detail}` : String(error);
    this.status.className = "status bad";
  }
}

function el(tag: string, className?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  return node;
}

function input(placeholder: string): HTMLInputElement {
  const node = document.createElement("input");
  node.placeholder = placeholder;
  return node;
}

function button(label: string, onClick: () => void, className = ""): HTMLButtonElement {
  const node = document.createElement("button");
  node.textContent = label;
  node.className = className;
  node.addEventListener("click", onClick);
  return node;
}
