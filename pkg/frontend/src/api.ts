/**
 * Typed client for the studio HTTP API. All state the UI shows comes from
 * these calls; nothing is computed client-side beyond layout.
 */

import type {
  Persona,
  SessionEnvelope,
  Turn,
  Violation,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
    readonly violations: Violation[] = [],
  ) {
    super(`${code}: ${detail}`);
  }
}

export interface PutResult {
  version: number;
  created: boolean;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class StudioApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  private async fail(response: Response): Promise<never> {
    let code = `HTTP_${response.status}`;
    let detail = response.statusText;
    let violations: Violation[] = [];
    try {
      const body = await response.json();
      code = body.code ?? code;
      detail = body.detail ?? detail;
      violations = body.violations ?? [];
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, code, detail, violations);
  }

  async getDesignText(designId: string): Promise<{ text: string; version: number }> {
    const response = await this.fetchImpl(this.url(`/designs/${designId}`));
    if (!response.ok) await this.fail(response);
    const version = parseEtag(response.headers.get("ETag"));
    return { text: await response.text(), version };
  }

  async putDesign(
    designId: string,
    documentText: string,
    ifMatchVersion?: number,
  ): Promise<PutResult> {
    const headers: Record<string, string> = { "Content-Type": "application/json" };
    if (ifMatchVersion !== undefined) headers["If-Match"] = `"${ifMatchVersion}"`;
    const response = await this.fetchImpl(this.url(`/designs/${designId}`), {
      method: "PUT",
      headers,
      body: documentText,
    });
    if (!response.ok) await this.fail(response);
    const body = await response.json();
    return { version: body.version, created: response.status === 201 };
  }

  async validateDraft(designId: string, documentText: string): Promise<Violation[]> {
    const response = await this.fetchImpl(this.url(`/designs/${designId}/validate`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: documentText,
    });
    if (!response.ok) await this.fail(response);
    return (await response.json()).violations;
  }

  async suggestComment(designId: string, persona: Persona): Promise<string> {
    const response = await this.fetchImpl(this.url(`/designs/${designId}/suggest-comment`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ persona }),
    });
    if (!response.ok) await this.fail(response);
    return (await response.json()).text;
  }

  async startSession(designId: string, comment: string): Promise<SessionEnvelope> {
    const response = await this.fetchImpl(this.url("/sessions"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ design_id: designId, comment }),
    });
    if (!response.ok) await this.fail(response);
    return response.json();
  }

  async postMessage(sessionId: string, text: string): Promise<SessionEnvelope> {
    const response = await this.fetchImpl(this.url(`/sessions/${sessionId}/messages`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
    if (!response.ok) await this.fail(response);
    return response.json();
  }

  async resetSession(sessionId: string): Promise<SessionEnvelope> {
    const response = await this.fetchImpl(this.url(`/sessions/${sessionId}/reset`), {
      method: "POST",
    });
    if (!response.ok) await this.fail(response);
    return response.json();
  }

  async getSuggestion(sessionId: string, persona: Persona): Promise<string> {
    const response = await this.fetchImpl(
      this.url(`/sessions/${sessionId}/suggestions?persona=${persona}`),
    );
    if (!response.ok) await this.fail(response);
    return (await response.json()).text;
  }

  async getTranscript(sessionId: string): Promise<Turn[]> {
    const response = await this.fetchImpl(this.url(`/sessions/${sessionId}/transcript`));
    if (!response.ok) await this.fail(response);
    const text = await response.text();
    return text
      .split("\n")
      .filter((line) => line.trim())
      .map((line) => JSON.parse(line) as Turn);
  }
}

export function parseEtag(header: string | null): number {
  if (header === null) return 0;
  const cleaned = header.trim().replace(/^"|"$/g, "");
  const version = Number.parseInt(cleaned, 10);
  return Number.isNaN(version) ? 0 : version;
}
