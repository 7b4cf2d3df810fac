import { describe, expect, it } from "vitest";

import { ApiError, StudioApi, parseEtag } from "../src/api.js";
import { FakeServer } from "./fakes.js";

describe("StudioApi", () => {
  it("parses the version from the ETag header", async () => {
    const server = new FakeServer().on("GET", /^\/designs\/d1$/, () =>
      new Response("{}", { status: 200, headers: { ETag: '"7"' } }),
    );
    const api = new StudioApi("http://fake.test", server.fetch);
    const { version } = await api.getDesignText("d1");
    expect(version).toBe(7);
    expect(parseEtag(null)).toBe(0);
  });

  it("sends the version precondition as If-Match", async () => {
    const server = new FakeServer().json("PUT", /^\/designs\/d1$/, {
      design_id: "d1",
      version: 3,
    });
    const api = new StudioApi("http://fake.test", server.fetch);
    await api.putDesign("d1", "{}", 2);
    expect(server.callsTo("PUT", /designs/)[0].headers["If-Match"]).toBe('"2"');
  });

  it("surfaces violation reports from rejected saves", async () => {
    const server = new FakeServer().json(
      "PUT",
      /^\/designs\/d1$/,
      {
        code: "INVALID_DESIGN",
        detail: "1 violations",
        violations: [{ code: "DUP_LABEL", path: "nodes.b2.label", detail: "duplicate" }],
      },
      422,
    );
    const api = new StudioApi("http://fake.test", server.fetch);
    const error = await api.putDesign("d1", "{}").catch((e) => e);
    expect(error).toBeInstanceOf(ApiError);
    expect(error.status).toBe(422);
    expect(error.violations[0].code).toBe("DUP_LABEL");
  });

  it("parses JSONL transcripts", async () => {
    const lines =
      '{"speaker": "student", "text": "hi", "origin": null, "ts": "t"}\n' +
      '{"speaker": "chatbot", "text": "hello", "origin": "r1", "ts": "t"}\n';
    const server = new FakeServer().on("GET", /transcript$/, () =>
      new Response(lines, { status: 200 }),
    );
    const api = new StudioApi("http://fake.test", server.fetch);
    const turns = await api.getTranscript("s1");
    expect(turns).toHaveLength(2);
    expect(turns[1].origin).toBe("r1");
  });
});
