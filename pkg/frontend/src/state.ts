/** The view-state store: a thin, always-server-backed state machine.
 *
 * Optimistic updates are deliberately absent -- every commit round-trips the
 * service, and the rendered model is recomputed from the response, so the
 * displayed strings are the server's canonical forms verbatim.  What-if
 * previews live in a separate ghost slot and never touch committed state.
 */

import { ServiceClient } from "./api.js";
import { buildModel } from "./render.js";
import type {
  RenderModel,
  SeedPayload,
  SessionInfo,
  VariableAnalysis,
} from "./types.js";

export class ViewState {
  sessionId = "";
  seed: SeedPayload | null = null;
  history: string[] = [];
  selected: string | null = null;
  ghost: SeedPayload | null = null;
  inspector: VariableAnalysis | null = null;
  private redoStack: string[] = [];

  constructor(private readonly client: ServiceClient) {}

  private adopt(info: SessionInfo): void {
    this.sessionId = info.id;
    this.seed = info.seed;
    this.history = [...info.history];
    this.ghost = null;
  }

  async start(graph: unknown, parts?: string[][] | string): Promise<void> {
    this.adopt(await this.client.createSession(graph, parts));
    this.redoStack = [];
    this.selected = null;
    this.inspector = null;
  }

  async refresh(): Promise<void> {
    this.adopt(await this.client.getSession(this.sessionId));
  }

  /** Commit a mutation at a mutable vertex (a click). */
  async clickMutate(vertex: string): Promise<void> {
    const response = await this.client.mutate(this.sessionId, vertex);
    this.adopt(response);
    this.redoStack = [];
    if (this.selected === vertex) {
      this.inspector = await this.client.variable(this.sessionId, vertex);
    }
  }

  /** Ghost preview; committed state is untouched by construction. */
  async hoverWhatif(vertex: string): Promise<void> {
    const response = await this.client.whatif(this.sessionId, vertex);
    this.ghost = response.seed;
  }

  clearWhatif(): void {
    this.ghost = null;
  }

  async inspect(vertex: string): Promise<VariableAnalysis> {
    this.selected = vertex;
    this.inspector = await this.client.variable(this.sessionId, vertex);
    return this.inspector;
  }

  async undo(): Promise<void> {
    const last = this.history[this.history.length - 1];
    this.adopt(await this.client.undo(this.sessionId));
    if (last !== undefined) {
      this.redoStack.push(last);
    }
  }

  async redo(): Promise<void> {
    const vertex = this.redoStack.pop();
    if (vertex === undefined) return;
    this.adopt(await this.client.mutate(this.sessionId, vertex));
  }

  canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  /** Committed picture (ghost rendered separately by the caller). */
  model(): RenderModel {
    if (!this.seed) throw new Error("no session");
    return buildModel(this.seed, this.selected);
  }

  ghostModel(): RenderModel | null {
    return this.ghost ? buildModel(this.ghost, null) : null;
  }
}
