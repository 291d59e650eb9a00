// @vitest-environment happy-dom

import { beforeEach, describe, expect, it } from "vitest";

import { answerLabel, relLabel, SessionPanel } from "../src/app.js";
import { ApiClient, ApiError, QueryResult, RelevanceResult } from "../src/api.js";
import { SessionModel } from "../src/model.js";

const traceResult: QueryResult = {
  answer: "yes",
  k_used: 0,
  mode: "liberal",
  query: "p",
  gamma: [
    { index: 2, formula: "p | q", rel: 0 },
    { index: 0, formula: "p", rel: 0 },
  ],
  trace: [
    { index: 2, formula: "p | q", rel: 0, decision: "accepted" },
    { index: 1, formula: "~p & ~q", rel: 0, decision: "rejected_inconsistent" },
    { index: 0, formula: "p", rel: 0, decision: "accepted" },
  ],
};

const relevancePayload: RelevanceResult = {
  formula: "p",
  profile: [
    { index: 0, formula: "p", rel: 0 },
    { index: 1, formula: "~p & ~q", rel: 0 },
    { index: 2, formula: "p | q", rel: 0 },
  ],
  edges: [
    [0, 1],
    [0, 2],
    [1, 2],
  ],
  saturation_level: 0,
};

class PanelStub {
  sequence: { index: number; formula: string }[] = [];
  nextQuery: QueryResult = traceResult;
  nextRelevance: RelevanceResult = relevancePayload;
  failRevision: ApiError | null = null;

  async createSession() {
    return this.viewData();
  }
  async getSession(id: string) {
    if (id !== "s1") throw new ApiError("unknown session", 404);
    return this.viewData();
  }
  async revise(_id: string, formula: string) {
    if (this.failRevision) throw this.failRevision;
    this.sequence.push({ index: this.sequence.length, formula });
    return { ...this.viewData(), index: this.sequence.length - 1 };
  }
  async query() {
    return this.nextQuery;
  }
  async relevance() {
    return this.nextRelevance;
  }
  async pop() {
    this.sequence.pop();
    return this.viewData();
  }
  async reset() {
    this.sequence = [];
    return this.viewData();
  }
  async exportText() {
    return this.sequence.map((e) => e.formula + "\n").join("");
  }

  private viewData() {
    return {
      id: "s1",
      k: 0,
      mode: "liberal",
      created: "",
      updated: "",
      length: this.sequence.length,
      sequence: this.sequence.slice(),
    };
  }
}

function setup() {
  document.body.innerHTML = '<div id="root"></div>';
  const stub = new PanelStub();
  const model = new SessionModel(stub as unknown as ApiClient);
  const panel = new SessionPanel(document.getElementById("root")!, model);
  return { stub, model, panel };
}

function text(selector: string): string {
  return document.querySelector(selector)?.textContent ?? "";
}

function input(selector: string): HTMLInputElement {
  return document.querySelector(selector) as HTMLInputElement;
}

describe("SessionPanel", () => {
  beforeEach(() => {
    document.body.innerHTML = "";
  });

  it("renders sequence rows after revisions", async () => {
    const { model, panel } = setup();
    await model.create();
    input("#revise-text").value = "p";
    await panel.submitRevision();
    input("#revise-text").value = "~p & ~q";
    await panel.submitRevision();
    const rows = Array.from(document.querySelectorAll("#rows .row .formula"));
    expect(rows.map((r) => r.textContent)).toEqual(["p", "~p & ~q"]);
    expect(input("#revise-text").value).toBe("");
  });

  it("shows the verdict badge with the raw answer in its dataset", async () => {
    const { model, panel } = setup();
    await model.create();
    input("#query-text").value = "p";
    await panel.submitQuery();
    const badge = document.querySelector("#verdict") as HTMLElement;
    expect(badge.textContent).toBe("yes");
    expect(badge.dataset.answer).toBe("yes");
    expect(badge.className).toContain("answer-yes");
  });

  it("renders no_information with a space in the label", async () => {
    const { stub, model, panel } = setup();
    stub.nextQuery = { ...traceResult, answer: "no_information" };
    await model.create();
    input("#query-text").value = "p";
    await panel.submitQuery();
    const badge = document.querySelector("#verdict") as HTMLElement;
    expect(badge.textContent).toBe("no information");
    expect(badge.dataset.answer).toBe("no_information");
  });

  it("lists trace rows in payload order with decision classes", async () => {
    const { model, panel } = setup();
    await model.create();
    input("#query-text").value = "p";
    await panel.submitQuery();
    const rows = Array.from(document.querySelectorAll("#trace .trace-row"));
    expect(rows.map((r) => (r as HTMLElement).dataset.decision)).toEqual([
      "accepted",
      "rejected_inconsistent",
      "accepted",
    ]);
    expect(rows.map((r) => r.querySelector(".index")!.textContent)).toEqual(["2", "1", "0"]);
    expect(text("#gamma-line")).toBe("working set: p | q, p");
  });

  it("draws the relevance graph and saturation line", async () => {
    const { model, panel } = setup();
    await model.create();
    input("#query-text").value = "p";
    await panel.submitQuery();
    expect(document.querySelector("#graph svg")).not.toBeNull();
    expect(text("#saturation")).toBe("saturation level: 0");
  });

  it("grows the graph when the answer used a higher level", async () => {
    const { stub, model, panel } = setup();
    stub.nextRelevance = {
      formula: "p",
      profile: [
        { index: 0, formula: "p & q", rel: 0 },
        { index: 1, formula: "r & ~q", rel: 1 },
      ],
      edges: [[0, 1]],
      saturation_level: 1,
    };
    await model.create();
    stub.nextQuery = { ...traceResult, k_used: 0 };
    input("#query-text").value = "p";
    await panel.submitQuery();
    expect(text("#graph")).toContain("p & q");
    expect(text("#graph")).not.toContain("r & ~q");

    stub.nextQuery = { ...traceResult, k_used: 1 };
    await panel.submitQuery();
    expect(text("#graph")).toContain("r & ~q");
  });

  it("shows a parse error inline and leaves the rows alone", async () => {
    const { stub, model, panel } = setup();
    await model.create();
    input("#revise-text").value = "p";
    await panel.submitRevision();
    stub.failRevision = new ApiError("unexpected end of input at offset 3", 400, 3);
    input("#revise-text").value = "p &";
    await panel.submitRevision();
    expect(text("#parse-error")).toContain("offset 3");
    expect(document.querySelectorAll("#rows .row")).toHaveLength(1);
    expect(input("#revise-text").value).toBe("p &");
  });

  it("marks the result stale after a revision", async () => {
    const { model, panel } = setup();
    await model.create();
    input("#query-text").value = "p";
    await panel.submitQuery();
    expect(document.querySelector("#stale")).toBeNull();
    input("#revise-text").value = "r";
    await panel.submitRevision();
    expect(document.querySelector("#stale")).not.toBeNull();
  });

  it("labels what-if queries", async () => {
    const { model, panel } = setup();
    await model.create();
    input("#query-text").value = "p";
    input("#what-if").checked = true;
    await panel.submitQuery();
    expect(text(".query-echo")).toContain("what if: p");
  });

  it("shows a banner for an unknown session id", async () => {
    const { model } = setup();
    await model.load("ghost");
    const banner = document.querySelector("#banner") as HTMLElement;
    expect(banner.hasAttribute("hidden")).toBe(false);
    expect(banner.textContent).toBe("no session named ghost");
  });

  it("prints the export text", async () => {
    const { model, panel } = setup();
    await model.create();
    input("#revise-text").value = "p";
    await panel.submitRevision();
    await model.exportText().then((t) => {
      const out = document.querySelector("#export-output") as HTMLElement;
      out.textContent = t;
      out.removeAttribute("hidden");
    });
    expect(text("#export-output")).toBe("p\n");
  });
});

describe("labels", () => {
  it("maps answers and levels for display", () => {
    expect(answerLabel("no_information")).toBe("no information");
    expect(answerLabel("yes")).toBe("yes");
    expect(relLabel("infinity")).toBe("inf");
    expect(relLabel(2)).toBe("2");
  });
});
