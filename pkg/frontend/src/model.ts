// View model for one live session. Holds exactly what the API returned,
// plus presentation state (stale flags, inline errors, what-if labeling).

import {
  ApiClient,
  ApiError,
  QueryResult,
  RelevanceResult,
  SequenceEntry,
} from "./api.js";

export interface QueryView {
  result: QueryResult;
  relevance: RelevanceResult | null;
  whatIf: boolean;
  stale: boolean;
}

export interface SessionView {
  id: string | null;
  banner: string | null;
  parseError: string | null;
  k: number;
  mode: string;
  rows: SequenceEntry[];
  lastQuery: QueryView | null;
}

function emptyView(): SessionView {
  return {
    id: null,
    banner: null,
    parseError: null,
    k: 0,
    mode: "liberal",
    rows: [],
    lastQuery: null,
  };
}

export class SessionModel {
  view: SessionView = emptyView();
  onChange: (() => void) | null = null;
  private queryTicket = 0;
  private mutationInFlight = false;

  constructor(private client: ApiClient) {}

  private changed(): void {
    if (this.onChange) this.onChange();
  }

  private adopt(data: { id: string; k: number; mode: string; sequence: SequenceEntry[] }): void {
    this.view.id = data.id;
    this.view.k = data.k;
    this.view.mode = data.mode;
    this.view.rows = data.sequence;
    this.view.banner = null;
  }

  async create(opts: { k?: number; mode?: string; sequence?: string } = {}): Promise<void> {
    const data = await this.client.createSession(opts);
    this.view = emptyView();
    this.adopt(data);
    this.changed();
  }

  async load(id: string): Promise<void> {
    try {
      const data = await this.client.getSession(id);
      this.adopt(data);
      this.view.parseError = null;
      this.view.lastQuery = null;
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        this.view.banner = `no session named ${id}`;
      } else {
        this.view.banner = String(error instanceof Error ? error.message : error);
      }
    }
    this.changed();
  }

  // One mutation at a time; a second submit while one is in flight is dropped.
  async submitRevision(text: string): Promise<boolean> {
    if (this.view.id === null || this.mutationInFlight) return false;
    this.mutationInFlight = true;
    try {
      const data = await this.client.revise(this.view.id, text);
      this.adopt(data);
      this.view.parseError = null;
      if (this.view.lastQuery) this.view.lastQuery.stale = true;
      return true;
    } catch (error) {
      if (error instanceof ApiError && error.status === 400) {
        this.view.parseError =
          error.position !== null ? `${error.message}` : error.message;
      } else {
        this.view.banner = String(error instanceof Error ? error.message : error);
      }
      return false;
    } finally {
      this.mutationInFlight = false;
      this.changed();
    }
  }

  async submitQuery(
    text: string,
    opts: { k?: number; mode?: string; whatIf?: boolean } = {},
  ): Promise<QueryResult | null> {
    if (this.view.id === null) return null;
    const ticket = ++this.queryTicket;
    try {
      const [result, relevance] = await Promise.all([
        this.client.query(this.view.id, text, { k: opts.k, mode: opts.mode }),
        this.client.relevance(this.view.id, text).catch(() => null),
      ]);
      if (ticket !== this.queryTicket) return null; // a newer query answered already
      this.view.lastQuery = {
        result,
        relevance,
        whatIf: opts.whatIf ?? false,
        stale: false,
      };
      this.view.parseError = null;
      this.changed();
      return result;
    } catch (error) {
      if (ticket !== this.queryTicket) return null;
      if (error instanceof ApiError && error.status === 400) {
        this.view.parseError = error.message;
      } else {
        this.view.banner = String(error instanceof Error ? error.message : error);
      }
      this.changed();
      return null;
    }
  }

  async pop(): Promise<void> {
    if (this.view.id === null || this.mutationInFlight) return;
    this.mutationInFlight = true;
    try {
      this.adopt(await this.client.pop(this.view.id));
      if (this.view.lastQuery) this.view.lastQuery.stale = true;
    } catch (error) {
      this.view.banner = String(error instanceof Error ? error.message : error);
    } finally {
      this.mutationInFlight = false;
      this.changed();
    }
  }

  async reset(): Promise<void> {
    if (this.view.id === null || this.mutationInFlight) return;
    this.mutationInFlight = true;
    try {
      this.adopt(await this.client.reset(this.view.id));
      if (this.view.lastQuery) this.view.lastQuery.stale = true;
    } finally {
      this.mutationInFlight = false;
      this.changed();
    }
  }

  exportText(): Promise<string> {
    if (this.view.id === null) return Promise.resolve("");
    return this.client.exportText(this.view.id);
  }
}
