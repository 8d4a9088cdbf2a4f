// Typed client for the advisor service.  The fetch implementation is
// injectable so tests can run under node against a live service.

import type { PosetJson, SessionPayload, WhatIf } from "./types.js";

export class AdvisorApiError extends Error {
  constructor(
    public status: number,
    public kind: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = typeof fetch;

export class AdvisorClient {
  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = fetch,
  ) {}

  private async call<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: body !== undefined ? { "Content-Type": "application/json" } : undefined,
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    if (response.status === 204) return undefined as T;
    const payload = await response.json();
    if (!response.ok) {
      throw new AdvisorApiError(
        response.status,
        payload?.error ?? "unknown",
        payload?.message ?? response.statusText,
      );
    }
    return payload as T;
  }

  createSession(poset: PosetJson, k: number): Promise<SessionPayload> {
    return this.call("POST", "/sessions", { poset, k });
  }

  getSession(id: string): Promise<SessionPayload> {
    return this.call("GET", `/sessions/${id}`);
  }

  submitAnswer(id: string, node: number, positive: boolean): Promise<SessionPayload> {
    return this.call("POST", `/sessions/${id}/answer`, { node, positive });
  }

  whatif(id: string): Promise<WhatIf> {
    return this.call("GET", `/sessions/${id}/whatif`);
  }

  deleteSession(id: string): Promise<void> {
    return this.call("DELETE", `/sessions/${id}`);
  }
}
