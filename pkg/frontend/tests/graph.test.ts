import { describe, expect, it } from "vitest";

import { RelevanceResult } from "../src/api.js";
import { atomsIn, buildGraph, relColor, renderSvg } from "../src/graph.js";

const payload: RelevanceResult = {
  formula: "p",
  profile: [
    { index: 0, formula: "p & q", rel: 0 },
    { index: 1, formula: "r & ~q", rel: 1 },
    { index: 2, formula: "s | ~s", rel: "infinity" },
  ],
  edges: [
    [0, 1],
    [0, 2],
  ],
  saturation_level: 1,
};

describe("atomsIn", () => {
  it("collects identifiers, sorted and deduplicated", () => {
    expect(atomsIn("q & (p | ~q)")).toEqual(["p", "q"]);
  });

  it("skips the constants", () => {
    expect(atomsIn("true | false")).toEqual([]);
    expect(atomsIn("true_flag & p")).toEqual(["p", "true_flag"]);
  });
});

describe("buildGraph", () => {
  it("has one query node, one node per element, one per atom", () => {
    const graph = buildGraph(payload);
    const kinds = graph.nodes.map((n) => n.kind);
    expect(kinds.filter((k) => k === "query")).toHaveLength(1);
    expect(kinds.filter((k) => k === "formula")).toHaveLength(3);
    const atoms = graph.nodes.filter((n) => n.kind === "atom").map((n) => n.label);
    expect(atoms).toEqual(["p", "q", "r", "s"]);
  });

  it("draws occurrence edges lexically and bridges from the payload", () => {
    const graph = buildGraph(payload);
    const occurrence = graph.edges.filter((e) => e.kind === "occurrence");
    expect(occurrence).toContainEqual({ from: "query", to: "a:p", kind: "occurrence" });
    expect(occurrence).toContainEqual({ from: "f1", to: "a:r", kind: "occurrence" });
    const bridges = graph.edges.filter((e) => e.kind === "bridge");
    expect(bridges).toEqual([
      { from: "f0", to: "f1", kind: "bridge" },
      { from: "f0", to: "f2", kind: "bridge" },
    ]);
  });

  it("colors by relevance level, gray for unreachable", () => {
    const graph = buildGraph(payload);
    const byId = new Map(graph.nodes.map((n) => [n.id, n]));
    expect(byId.get("f0")!.color).toBe(relColor(0));
    expect(byId.get("f1")!.color).toBe(relColor(1));
    expect(byId.get("f2")!.color).toBe(relColor("infinity"));
    expect(relColor(0)).not.toBe(relColor(1));
    expect(relColor("infinity")).toBe("#9e9e9e");
    expect(relColor(99)).toBe(relColor(4));
  });

  it("limits to the formulas within level k, so raising k adds nodes", () => {
    const atK0 = buildGraph(payload, 0);
    const idsAt0 = atK0.nodes.map((n) => n.id);
    expect(idsAt0).toContain("f0");
    expect(idsAt0).not.toContain("f1");
    expect(idsAt0).not.toContain("f2");
    expect(atK0.edges.filter((e) => e.kind === "bridge")).toEqual([]);
    expect(atK0.nodes.filter((n) => n.kind === "atom").map((n) => n.label)).toEqual(["p", "q"]);

    const atK1 = buildGraph(payload, 1);
    const idsAt1 = atK1.nodes.map((n) => n.id);
    expect(idsAt1).toContain("f1");
    expect(idsAt1).not.toContain("f2");
    expect(atK1.edges.filter((e) => e.kind === "bridge")).toEqual([
      { from: "f0", to: "f1", kind: "bridge" },
    ]);
  });

  it("never shows unreachable entries under a finite limit", () => {
    const graph = buildGraph(payload, 5);
    expect(graph.nodes.map((n) => n.id)).not.toContain("f2");
  });
});

describe("renderSvg", () => {
  it("produces one circle per node and escapes labels", () => {
    const graph = buildGraph({ ...payload, formula: "p & q" });
    const svg = renderSvg(graph);
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg.match(/<circle/g)).toHaveLength(graph.nodes.length);
    expect(svg).toContain("p &amp; q");
    expect(svg).not.toContain("p & q<");
  });
});
