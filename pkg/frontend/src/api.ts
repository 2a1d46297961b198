/** Typed client over the service's JSON endpoints.
 *
 * The transport is injectable so that tests can replay recorded responses;
 * the browser build uses fetch.  The client never interprets the payloads --
 * all math strings are displayed verbatim.
 */

import type {
  MutateResponse,
  SessionInfo,
  VariableAnalysis,
  WhatifResponse,
} from "./types.js";

export interface Transport {
  request(method: string, path: string, body?: unknown): Promise<unknown>;
}

export class HttpError extends Error {
  constructor(readonly status: number, readonly detail: string) {
    super(`HTTP ${status}: ${detail}`);
  }
}

export class FetchTransport implements Transport {
  constructor(private readonly baseUrl: string) {}

  async request(method: string, path: string, body?: unknown): Promise<unknown> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail =
        typeof payload === "object" && payload !== null && "detail" in payload
          ? String((payload as { detail: unknown }).detail)
          : response.statusText;
      throw new HttpError(response.status, detail);
    }
    return payload;
  }
}

export class ServiceClient {
  constructor(private readonly transport: Transport) {}

  createSession(
    graph: unknown,
    parts?: string[][] | string,
    coeff = "x",
  ): Promise<SessionInfo> {
    return this.transport.request("POST", "/session", {
      graph,
      parts,
      coeff,
    }) as Promise<SessionInfo>;
  }

  getSession(id: string): Promise<SessionInfo> {
    return this.transport.request("GET", `/session/${id}`) as Promise<SessionInfo>;
  }

  mutate(id: string, vertex: string): Promise<MutateResponse> {
    return this.transport.request("POST", `/session/${id}/mutate`, {
      vertex,
    }) as Promise<MutateResponse>;
  }

  undo(id: string): Promise<SessionInfo> {
    return this.transport.request("POST", `/session/${id}/undo`) as Promise<SessionInfo>;
  }

  whatif(id: string, vertex: string): Promise<WhatifResponse> {
    return this.transport.request(
      "GET",
      `/session/${id}/whatif/${vertex}`,
    ) as Promise<WhatifResponse>;
  }

  variable(id: string, vertex: string): Promise<VariableAnalysis> {
    return this.transport.request(
      "GET",
      `/session/${id}/variable/${vertex}`,
    ) as Promise<VariableAnalysis>;
  }
}
