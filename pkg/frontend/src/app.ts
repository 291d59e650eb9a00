// Session panel: submit revisions, pose queries and what-ifs, inspect the
// decision trace and the relevance graph. All verdicts come from the
// service; this file only draws them.

import { ApiClient, QueryResult, Rel } from "./api.js";
import { buildGraph, renderSvg } from "./graph.js";
import { SessionModel } from "./model.js";

export function answerLabel(answer: string): string {
  return answer.replace(/_/g, " ");
}

export function relLabel(rel: Rel): string {
  return rel === "infinity" ? "inf" : String(rel);
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text) node.textContent = text;
  return node;
}

export class SessionPanel {
  constructor(
    private root: HTMLElement,
    readonly model: SessionModel,
  ) {
    model.onChange = () => this.refresh();
    this.mount();
  }

  private grab(id: string): HTMLElement {
    const node = this.root.querySelector(`#${id}`);
    if (!node) throw new Error(`missing #${id}`);
    return node as HTMLElement;
  }

  private mount(): void {
    this.root.innerHTML = "";
    const panel = el("div", { class: "panel" });

    panel.appendChild(el("div", { id: "banner", class: "banner", hidden: "" }));

    const controls = el("div", { id: "session-controls", class: "controls" });
    controls.appendChild(el("input", { id: "session-id", placeholder: "session id" }));
    controls.appendChild(el("button", { id: "load-button", type: "button" }, "load"));
    controls.appendChild(el("button", { id: "new-button", type: "button" }, "new session"));
    controls.appendChild(el("button", { id: "pop-button", type: "button" }, "pop"));
    controls.appendChild(el("button", { id: "reset-button", type: "button" }, "reset"));
    controls.appendChild(el("button", { id: "export-button", type: "button" }, "export"));
    panel.appendChild(controls);

    panel.appendChild(el("pre", { id: "export-output", hidden: "" }));
    panel.appendChild(el("table", { id: "rows" }));

    const revise = el("form", { id: "revise-form" });
    revise.appendChild(el("input", { id: "revise-text", placeholder: "formula to append" }));
    revise.appendChild(el("button", { type: "submit" }, "revise"));
    revise.appendChild(el("span", { id: "parse-error", class: "parse-error" }));
    panel.appendChild(revise);

    const query = el("form", { id: "query-form" });
    query.appendChild(el("input", { id: "query-text", placeholder: "query formula" }));
    query.appendChild(el("label", {}, "k"));
    query.appendChild(el("input", { id: "k-input", type: "number", min: "0", value: "0" }));
    const mode = el("select", { id: "mode-select" });
    mode.appendChild(el("option", { value: "liberal" }, "liberal"));
    mode.appendChild(el("option", { value: "strict" }, "strict"));
    query.appendChild(mode);
    const whatIfLabel = el("label", {}, "what if");
    whatIfLabel.appendChild(el("input", { id: "what-if", type: "checkbox" }));
    query.appendChild(whatIfLabel);
    query.appendChild(el("button", { type: "submit" }, "ask"));
    panel.appendChild(query);

    panel.appendChild(el("div", { id: "result", hidden: "" }));
    this.root.appendChild(panel);

    this.grab("load-button").onclick = () => {
      const id = (this.grab("session-id") as HTMLInputElement).value.trim();
      if (id) void this.model.load(id);
    };
    this.grab("new-button").onclick = () => void this.model.create();
    this.grab("pop-button").onclick = () => void this.model.pop();
    this.grab("reset-button").onclick = () => void this.model.reset();
    this.grab("export-button").onclick = () => {
      void this.model.exportText().then((text) => {
        const out = this.grab("export-output");
        out.textContent = text;
        out.removeAttribute("hidden");
      });
    };
    (this.grab("revise-form") as HTMLFormElement).onsubmit = (event) => {
      event.preventDefault();
      void this.submitRevision();
    };
    (this.grab("query-form") as HTMLFormElement).onsubmit = (event) => {
      event.preventDefault();
      void this.submitQuery();
    };
    this.refresh();
  }

  async submitRevision(): Promise<void> {
    const input = this.grab("revise-text") as HTMLInputElement;
    const ok = await this.model.submitRevision(input.value);
    if (ok) input.value = "";
  }

  async submitQuery(): Promise<QueryResult | null> {
    const text = (this.grab("query-text") as HTMLInputElement).value;
    const k = Number((this.grab("k-input") as HTMLInputElement).value);
    const mode = (this.grab("mode-select") as HTMLSelectElement).value;
    const whatIf = (this.grab("what-if") as HTMLInputElement).checked;
    return this.model.submitQuery(text, { k, mode, whatIf });
  }

  refresh(): void {
    const view = this.model.view;

    const banner = this.grab("banner");
    if (view.banner) {
      banner.textContent = view.banner;
      banner.removeAttribute("hidden");
    } else {
      banner.setAttribute("hidden", "");
    }

    const rows = this.grab("rows");
    rows.innerHTML = "";
    for (const entry of view.rows) {
      const tr = el("tr", { class: "row" });
      tr.appendChild(el("td", { class: "index" }, String(entry.index)));
      tr.appendChild(el("td", { class: "formula" }, entry.formula));
      rows.appendChild(tr);
    }

    this.grab("parse-error").textContent = view.parseError ?? "";

    const result = this.grab("result");
    result.innerHTML = "";
    const last = view.lastQuery;
    if (!last) {
      result.setAttribute("hidden", "");
      return;
    }
    result.removeAttribute("hidden");

    if (last.stale) {
      result.appendChild(
        el("div", { id: "stale", class: "stale" }, "stale: the sequence changed since this answer"),
      );
    }
    const headline = el("div", { class: "headline" });
    const badge = el(
      "span",
      { id: "verdict", class: `badge answer-${last.result.answer}` },
      answerLabel(last.result.answer),
    );
    badge.dataset.answer = last.result.answer;
    headline.appendChild(badge);
    headline.appendChild(
      el(
        "span",
        { class: "query-echo" },
        ` ${last.whatIf ? "what if: " : ""}${last.result.query}  (k=${last.result.k_used}, ${last.result.mode})`,
      ),
    );
    result.appendChild(headline);

    const trace = el("table", { id: "trace" });
    for (const entry of last.result.trace) {
      const tr = el("tr", { class: "trace-row" });
      tr.dataset.decision = entry.decision;
      tr.appendChild(el("td", { class: "index" }, String(entry.index)));
      tr.appendChild(el("td", { class: "rel" }, relLabel(entry.rel)));
      const decision = el("td", { class: `decision decision-${entry.decision}` }, entry.decision);
      tr.appendChild(decision);
      tr.appendChild(el("td", { class: "formula" }, entry.formula));
      trace.appendChild(tr);
    }
    result.appendChild(trace);

    result.appendChild(
      el(
        "div",
        { id: "gamma-line" },
        `working set: ${last.result.gamma.map((g) => g.formula).join(", ") || "(empty)"}`,
      ),
    );

    if (last.relevance) {
      const holder = el("div", { id: "graph" });
      holder.innerHTML = renderSvg(buildGraph(last.relevance, last.result.k_used));
      result.appendChild(holder);
      result.appendChild(
        el(
          "div",
          { id: "saturation" },
          `saturation level: ${last.relevance.saturation_level}`,
        ),
      );
    }
  }
}

export function bootstrap(root: HTMLElement, base?: string): SessionPanel {
  const client = new ApiClient(base ?? "");
  const model = new SessionModel(client);
  return new SessionPanel(root, model);
}

if (typeof document !== "undefined") {
  const root = document.getElementById("app");
  if (root) bootstrap(root);
}
