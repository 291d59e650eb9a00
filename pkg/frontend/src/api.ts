// Typed client for the session service. Mirrors the wire schema verbatim;
// every bit of logic stays on the server.

export type Rel = number | "infinity";
export type AnswerValue = "yes" | "no" | "no_information";
export type Decision =
  | "accepted"
  | "rejected_inconsistent"
  | "rejected_irrelevant"
  | "halted";

export interface SequenceEntry {
  index: number;
  formula: string;
}

export interface TraceEntry {
  index: number;
  formula: string;
  rel: Rel;
  decision: Decision;
}

export interface GammaEntry {
  index: number;
  formula: string;
  rel: Rel;
}

export interface QueryResult {
  answer: AnswerValue;
  k_used: number;
  mode: string;
  query: string;
  gamma: GammaEntry[];
  trace: TraceEntry[];
}

export interface RelevanceResult {
  formula: string;
  profile: GammaEntry[];
  edges: [number, number][];
  saturation_level: number;
}

export interface SessionData {
  id: string;
  k: number;
  mode: string;
  created: string;
  updated: string;
  length: number;
  sequence: SequenceEntry[];
}

export interface ReviseResponse extends SessionData {
  index: number;
}

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly position: number | null = null,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

function detailMessage(body: unknown): { message: string; position: number | null } {
  if (body && typeof body === "object" && "detail" in body) {
    const detail = (body as { detail: unknown }).detail;
    if (detail && typeof detail === "object" && "message" in detail) {
      const d = detail as { message: string; position?: number };
      return { message: d.message, position: d.position ?? null };
    }
    return { message: JSON.stringify(detail), position: null };
  }
  return { message: "request failed", position: null };
}

export class ApiClient {
  constructor(
    private base: string,
    private fetchFn: typeof fetch = (input, init) => fetch(input, init),
  ) {
    this.base = base.replace(/\/+$/, "");
  }

  private async request(method: string, path: string, body?: unknown): Promise<any> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
      init.headers = { "Content-Type": "application/json" };
    }
    let response: Response;
    try {
      response = await this.fetchFn(this.base + path, init);
    } catch (error) {
      throw new ApiError(`service unreachable: ${String(error)}`, 0);
    }
    const type = response.headers.get("content-type") ?? "";
    if (!response.ok) {
      const parsed = type.includes("json") ? await response.json() : {};
      const { message, position } = detailMessage(parsed);
      throw new ApiError(message, response.status, position);
    }
    if (type.includes("text/plain")) {
      return response.text();
    }
    return response.json();
  }

  createSession(opts: { k?: number; mode?: string; sequence?: string } = {}): Promise<SessionData> {
    return this.request("POST", "/sessions", opts);
  }

  listSessions(): Promise<{ sessions: string[] }> {
    return this.request("GET", "/sessions");
  }

  getSession(id: string): Promise<SessionData> {
    return this.request("GET", `/sessions/${id}`);
  }

  revise(id: string, formula: string): Promise<ReviseResponse> {
    return this.request("POST", `/sessions/${id}/revise`, { formula });
  }

  query(
    id: string,
    formula: string,
    opts: { k?: number; mode?: string } = {},
  ): Promise<QueryResult> {
    return this.request("POST", `/sessions/${id}/query`, { formula, ...opts });
  }

  relevance(id: string, formula: string): Promise<RelevanceResult> {
    return this.request("GET", `/sessions/${id}/relevance?formula=${encodeURIComponent(formula)}`);
  }

  pop(id: string): Promise<SessionData> {
    return this.request("POST", `/sessions/${id}/pop`);
  }

  reset(id: string): Promise<SessionData> {
    return this.request("POST", `/sessions/${id}/reset`);
  }

  exportText(id: string): Promise<string> {
    return this.request("GET", `/sessions/${id}/export`);
  }
}
