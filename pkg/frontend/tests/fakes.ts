/** In-memory fetch double: route table keyed by method + path, call log. */

export interface Call {
  method: string;
  path: string;
  headers: Record<string, string>;
  body: string | null;
}

type Handler = (call: Call) => Response;

export class FakeServer {
  calls: Call[] = [];
  private routes: Array<{ method: string; pattern: RegExp; handler: Handler }> = [];

  on(method: string, pattern: RegExp, handler: Handler): this {
    this.routes.push({ method: method.toUpperCase(), pattern, handler });
    return this;
  }

  json(method: string, pattern: RegExp, body: unknown, status = 200, headers: Record<string, string> = {}): this {
    return this.on(method, pattern, () =>
      new Response(JSON.stringify(body), {
        status,
        headers: { "Content-Type": "application/json", ...headers },
      }),
    );
  }

  fetch = async (input: string, init?: RequestInit): Promise<Response> => {
    const url = new URL(input, "http://fake.test");
    const method = (init?.method ?? "GET").toUpperCase();
    const headers: Record<string, string> = {};
    for (const [key, value] of Object.entries(init?.headers ?? {})) {
      headers[key] = String(value);
    }
    const call: Call = {
      method,
      path: url.pathname + (url.search || ""),
      headers,
      body: typeof init?.body === "string" ? init.body : null,
    };
    this.calls.push(call);
    for (const route of this.routes) {
      if (route.method === method && route.pattern.test(call.path)) {
        return route.handler(call);
      }
    }
    return new Response(JSON.stringify({ code: "NOT_FOUND", detail: call.path }), {
      status: 404,
      headers: { "Content-Type": "application/json" },
    });
  };

  callsTo(method: string, pattern: RegExp): Call[] {
    return this.calls.filter((c) => c.method === method.toUpperCase() && pattern.test(c.path));
  }
}
