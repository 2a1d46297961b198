/** Replay transport: serves the fixture tree recorded from the real service.
 *
 * It mirrors the service's state semantics (mutate appends to the history,
 * undo pops, reads leave it alone), so scripted click sequences exercise the
 * client exactly as the live backend would -- with byte-identical payloads.
 */

import type { Transport } from "../src/api.js";

interface FixtureFile {
  create: { id: string; seed: unknown; history: string[] };
  transitions: Record<string, unknown>;
}

export class FakeTransport implements Transport {
  private history: string[] = [];
  readonly sessionId: string;

  constructor(private readonly fixture: FixtureFile) {
    this.sessionId = fixture.create.id;
  }

  private lookup(action: string): unknown {
    const key = `${this.history.join(".")}|${action}`;
    const hit = this.fixture.transitions[key];
    if (hit === undefined) {
      throw new Error(`fixture has no transition for ${key}`);
    }
    return structuredClone(hit);
  }

  async request(method: string, path: string, body?: unknown): Promise<unknown> {
    if (method === "POST" && path === "/session") {
      this.history = [];
      return structuredClone(this.fixture.create);
    }
    const m = path.match(/^\/session\/([^/]+)(?:\/(.*))?$/);
    if (!m || m[1] !== this.sessionId) {
      throw new Error(`unknown path ${path}`);
    }
    const rest = m[2] ?? "";
    if (method === "GET" && rest === "") {
      return this.lookup("get");
    }
    if (method === "POST" && rest === "mutate") {
      const vertex = (body as { vertex: string }).vertex;
      const response = this.lookup(`mutate:${vertex}`);
      this.history.push(vertex);
      return response;
    }
    if (method === "POST" && rest === "undo") {
      const response = this.lookup("undo");
      this.history.pop();
      return response;
    }
    if (method === "GET" && rest.startsWith("whatif/")) {
      return this.lookup(`whatif:${rest.slice("whatif/".length)}`);
    }
    if (method === "GET" && rest.startsWith("variable/")) {
      return this.lookup(`variable:${rest.slice("variable/".length)}`);
    }
    throw new Error(`unsupported request ${method} ${path}`);
  }
}
