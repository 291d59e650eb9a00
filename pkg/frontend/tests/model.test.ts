import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, QueryResult, SessionData } from "../src/api.js";
import { SessionModel } from "../src/model.js";

function sessionData(formulas: string[], extra: Partial<SessionData> = {}): SessionData {
  return {
    id: "s1",
    k: 0,
    mode: "liberal",
    created: "2026-01-01T00:00:00",
    updated: "2026-01-01T00:00:00",
    length: formulas.length,
    sequence: formulas.map((formula, index) => ({ index, formula })),
    ...extra,
  };
}

function queryResult(answer: QueryResult["answer"], query = "p"): QueryResult {
  return { answer, k_used: 0, mode: "liberal", query, gamma: [], trace: [] };
}

// Hand stub standing in for the HTTP client; each test overrides what it needs.
class StubClient {
  data = sessionData([]);
  queryResponses: QueryResult[] = [];
  queryDelays: (Promise<void> | undefined)[] = [];
  reviseError: ApiError | null = null;
  reviseCalls = 0;
  queryCalls = 0;

  async createSession(): Promise<SessionData> {
    return this.data;
  }

  async getSession(id: string): Promise<SessionData> {
    if (id !== this.data.id) throw new ApiError("unknown session", 404);
    return this.data;
  }

  async revise(_id: string, formula: string): Promise<SessionData & { index: number }> {
    this.reviseCalls += 1;
    if (this.reviseError) throw this.reviseError;
    const next = this.data.sequence.concat([
      { index: this.data.sequence.length, formula },
    ]);
    this.data = { ...this.data, sequence: next, length: next.length };
    return { ...this.data, index: next.length - 1 };
  }

  async query(): Promise<QueryResult> {
    const index = this.queryCalls;
    this.queryCalls += 1;
    const delay = this.queryDelays[index];
    if (delay) await delay;
    return this.queryResponses[index] ?? queryResult("no_information");
  }

  async relevance(): Promise<never> {
    throw new ApiError("not stubbed", 500);
  }

  async pop(): Promise<SessionData> {
    const next = this.data.sequence.slice(0, -1);
    this.data = { ...this.data, sequence: next, length: next.length };
    return this.data;
  }

  async reset(): Promise<SessionData> {
    this.data = { ...this.data, sequence: [], length: 0 };
    return this.data;
  }

  async exportText(): Promise<string> {
    return this.data.sequence.map((e) => e.formula + "\n").join("");
  }
}

function makeModel(stub: StubClient): SessionModel {
  return new SessionModel(stub as unknown as ApiClient);
}

describe("SessionModel", () => {
  it("loads a session into the view", async () => {
    const stub = new StubClient();
    stub.data = sessionData(["p", "~p"]);
    const model = makeModel(stub);
    await model.load("s1");
    expect(model.view.id).toBe("s1");
    expect(model.view.rows.map((r) => r.formula)).toEqual(["p", "~p"]);
    expect(model.view.banner).toBeNull();
  });

  it("shows a banner for an unknown id and keeps going", async () => {
    const model = makeModel(new StubClient());
    await model.load("missing");
    expect(model.view.banner).toBe("no session named missing");
    expect(model.view.id).toBeNull();
  });

  it("appends on successful revision and marks the last answer stale", async () => {
    const stub = new StubClient();
    stub.queryResponses = [queryResult("yes")];
    const model = makeModel(stub);
    await model.create();
    await model.submitQuery("p");
    expect(model.view.lastQuery?.stale).toBe(false);
    const ok = await model.submitRevision("~q");
    expect(ok).toBe(true);
    expect(model.view.rows.map((r) => r.formula)).toEqual(["~q"]);
    expect(model.view.lastQuery?.stale).toBe(true);
  });

  it("keeps state unchanged on a parse error and records the inline message", async () => {
    const stub = new StubClient();
    const model = makeModel(stub);
    await model.create();
    await model.submitRevision("p");
    stub.reviseError = new ApiError("unexpected end of input at offset 3", 400, 3);
    const ok = await model.submitRevision("p &");
    expect(ok).toBe(false);
    expect(model.view.rows.map((r) => r.formula)).toEqual(["p"]);
    expect(model.view.parseError).toContain("offset 3");
    stub.reviseError = null;
    await model.submitRevision("q");
    expect(model.view.parseError).toBeNull();
  });

  it("allows only one mutation in flight", async () => {
    const stub = new StubClient();
    const model = makeModel(stub);
    await model.create();
    const first = model.submitRevision("p");
    const second = model.submitRevision("q");
    expect(await Promise.all([first, second])).toEqual([true, false]);
    expect(stub.reviseCalls).toBe(1);
  });

  it("discards a stale query result by sequence number", async () => {
    const stub = new StubClient();
    let releaseFirst: () => void = () => undefined;
    stub.queryResponses = [queryResult("yes", "old"), queryResult("no", "new")];
    stub.queryDelays = [new Promise<void>((resolve) => (releaseFirst = resolve))];
    const model = makeModel(stub);
    await model.create();
    const first = model.submitQuery("old");
    const second = model.submitQuery("new");
    const newResult = await second;
    expect(newResult?.query).toBe("new");
    releaseFirst();
    const oldResult = await first;
    expect(oldResult).toBeNull();
    expect(model.view.lastQuery?.result.query).toBe("new");
  });

  it("labels what-if queries without changing the payload handling", async () => {
    const stub = new StubClient();
    stub.queryResponses = [queryResult("no")];
    const model = makeModel(stub);
    await model.create();
    await model.submitQuery("p", { whatIf: true });
    expect(model.view.lastQuery?.whatIf).toBe(true);
    expect(model.view.lastQuery?.result.answer).toBe("no");
  });

  it("pop and reset refresh the rows", async () => {
    const stub = new StubClient();
    const model = makeModel(stub);
    await model.create();
    await model.submitRevision("p");
    await model.submitRevision("q");
    await model.pop();
    expect(model.view.rows.map((r) => r.formula)).toEqual(["p"]);
    await model.reset();
    expect(model.view.rows).toEqual([]);
  });

  it("notifies onChange for every state transition", async () => {
    const stub = new StubClient();
    const model = makeModel(stub);
    let ticks = 0;
    model.onChange = () => (ticks += 1);
    await model.create();
    await model.submitRevision("p");
    await model.submitQuery("p");
    expect(ticks).toBe(3);
  });
});
