// Bipartite relevance graph: sequence formulas on one side, the atoms
// occurring in them on the other. Levels and formula-formula edges come
// straight from the API payload; atom extraction is lexical and only
// feeds the drawing.

import { RelevanceResult, Rel } from "./api.js";

export interface GraphNode {
  id: string;
  kind: "formula" | "atom" | "query";
  label: string;
  rel: Rel | null;
  color: string;
}

export interface GraphEdge {
  from: string;
  to: string;
  kind: "occurrence" | "bridge";
}

export interface BipartiteGraph {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

const LEVEL_COLORS = ["#2e7d32", "#1565c0", "#6a1b9a", "#e65100", "#8d6e63"];
const UNREACHED = "#9e9e9e";

export function relColor(rel: Rel | null): string {
  if (rel === null) return "#37474f";
  if (rel === "infinity") return UNREACHED;
  return LEVEL_COLORS[Math.min(rel, LEVEL_COLORS.length - 1)];
}

export function atomsIn(formula: string): string[] {
  const seen = new Set<string>();
  for (const match of formula.matchAll(/[a-z][a-z0-9_]*/g)) {
    if (match[0] !== "true" && match[0] !== "false") seen.add(match[0]);
  }
  return Array.from(seen).sort();
}

// With a finite kLimit the graph contains exactly the formulas within reach
// at that level; raising the limit grows the picture. null draws everything
// the profile mentions, unreachable entries in gray.
export function buildGraph(payload: RelevanceResult, kLimit: number | null = null): BipartiteGraph {
  const shown = payload.profile.filter(
    (entry) => kLimit === null || (entry.rel !== "infinity" && entry.rel <= kLimit),
  );
  const nodes: GraphNode[] = [];
  const edges: GraphEdge[] = [];
  const atoms = new Set<string>();

  nodes.push({
    id: "query",
    kind: "query",
    label: payload.formula,
    rel: null,
    color: relColor(null),
  });
  for (const atom of atomsIn(payload.formula)) atoms.add(atom);
  for (const entry of shown) {
    nodes.push({
      id: `f${entry.index}`,
      kind: "formula",
      label: entry.formula,
      rel: entry.rel,
      color: relColor(entry.rel),
    });
    for (const atom of atomsIn(entry.formula)) atoms.add(atom);
  }

  for (const atom of Array.from(atoms).sort()) {
    nodes.push({ id: `a:${atom}`, kind: "atom", label: atom, rel: null, color: "#546e7a" });
  }

  for (const atom of atomsIn(payload.formula)) {
    edges.push({ from: "query", to: `a:${atom}`, kind: "occurrence" });
  }
  for (const entry of shown) {
    for (const atom of atomsIn(entry.formula)) {
      edges.push({ from: `f${entry.index}`, to: `a:${atom}`, kind: "occurrence" });
    }
  }
  const shownIndices = new Set(shown.map((entry) => entry.index));
  for (const [i, j] of payload.edges) {
    if (!shownIndices.has(i) || !shownIndices.has(j)) continue;
    edges.push({ from: `f${i}`, to: `f${j}`, kind: "bridge" });
  }
  return { nodes, edges };
}

// Plain two-column SVG. Cosmetic only; nothing below is load-bearing.
export function renderSvg(graph: BipartiteGraph, width = 520, rowHeight = 34): string {
  const left = graph.nodes.filter((n) => n.kind !== "atom");
  const right = graph.nodes.filter((n) => n.kind === "atom");
  const height = Math.max(left.length, right.length, 1) * rowHeight + 20;
  const pos = new Map<string, { x: number; y: number }>();
  left.forEach((n, i) => pos.set(n.id, { x: 150, y: 30 + i * rowHeight }));
  right.forEach((n, i) => pos.set(n.id, { x: width - 90, y: 30 + i * rowHeight }));

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" width="${width}" height="${height}">`,
  );
  for (const edge of graph.edges) {
    const a = pos.get(edge.from);
    const b = pos.get(edge.to);
    if (!a || !b) continue;
    const dash = edge.kind === "bridge" ? ' stroke-dasharray="4 3"' : "";
    parts.push(
      `<line x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}" stroke="#b0bec5" stroke-width="1"${dash}/>`,
    );
  }
  for (const node of graph.nodes) {
    const p = pos.get(node.id)!;
    const radius = node.kind === "atom" ? 12 : 16;
    parts.push(`<circle cx="${p.x}" cy="${p.y}" r="${radius}" fill="${node.color}"/>`);
    const anchor = node.kind === "atom" ? "start" : "end";
    const dx = node.kind === "atom" ? 18 : -20;
    const relTag = node.rel === null ? "" : ` (rel ${node.rel === "infinity" ? "inf" : node.rel})`;
    parts.push(
      `<text x="${p.x + dx}" y="${p.y + 4}" text-anchor="${anchor}" font-size="12" font-family="monospace">${escapeXml(node.label + relTag)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
