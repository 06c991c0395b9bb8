/** HTTP client for the service; speaks only /simplify and /health.
 *
 * One request may be in flight per client: starting a new simplification
 * aborts the stale one, whose promise then rejects with RequestSuperseded.
 */

import type { SimplifyRequest, SimplifyResponse } from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class ServiceUnreachableError extends Error {
  constructor(message = "service unavailable") {
    super(message);
    this.name = "ServiceUnreachableError";
  }
}

export class RequestSuperseded extends Error {
  constructor() {
    super("request superseded by a newer submission");
    this.name = "RequestSuperseded";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class SimplifyClient {
  private inflight: AbortController | null = null;

  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async simplify(request: SimplifyRequest): Promise<SimplifyResponse> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;

    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}/simplify`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(request),
        signal: controller.signal,
      });
    } catch (error) {
      if (controller.signal.aborted) {
        throw new RequestSuperseded();
      }
      throw new ServiceUnreachableError();
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
      }
    }

    if (!response.ok) {
      let detail = `request failed with status ${response.status}`;
      try {
        const body = (await response.json()) as { error?: string };
        if (body && typeof body.error === "string") {
          detail = body.error;
        }
      } catch {
        // keep the generic message
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as SimplifyResponse;
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchImpl(`${this.baseUrl}/health`);
      return response.ok;
    } catch {
      return false;
    }
  }
}
