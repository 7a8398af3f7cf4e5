/**
 * Explorer state: immutable snapshot lineage, layer toggles, sliders, and
 * latest-wins request bookkeeping.
 *
 * Snapshots are content-addressed by the service, so "drag a vertex back to
 * where it was" is detected by comparing the target against ancestor
 * snapshots and rejoining the matching one instead of re-projecting; undo
 * and drag-back are therefore exact.
 */

import type { Client, PolygonDoc, SceneParams, Snapshot } from "./api.js";
import type { WirePoint } from "./rational.js";
import { parseRat, ratEq } from "./rational.js";

export interface ViewState {
  snapshotId: string;
  polygon: PolygonDoc;
  layers: Set<string>;
  t: string; // exact rational strings, snapped before they get here
  level: string;
  mu: string;
}

interface HistoryEntry {
  snapshotId: string;
  polygon: PolygonDoc;
}

function samePoint(a: WirePoint, b: WirePoint): boolean {
  return ratEq(parseRat(a[0]), parseRat(b[0])) && ratEq(parseRat(a[1]), parseRat(b[1]));
}

export class ExplorerState {
  view: ViewState;
  private history: HistoryEntry[] = [];
  private future: HistoryEntry[] = [];
  private tokens: Map<string, number> = new Map();

  constructor(
    private client: Client,
    snapshot: Snapshot,
  ) {
    this.view = {
      snapshotId: snapshot.id,
      polygon: snapshot.polygon,
      layers: new Set(["ae", "css"]),
      t: "1/2",
      level: "1/4",
      mu: "auto",
    };
  }

  get snapshotId(): string {
    return this.view.snapshotId;
  }

  params(): SceneParams {
    return { t: this.view.t, level: this.view.level, mu: this.view.mu };
  }

  toggleLayer(name: string): void {
    if (this.view.layers.has(name)) this.view.layers.delete(name);
    else this.view.layers.add(name);
  }

  /** Monotone token per layer; a response applies only if still newest. */
  nextToken(layer: string): number {
    const tok = (this.tokens.get(layer) ?? 0) + 1;
    this.tokens.set(layer, tok);
    return tok;
  }

  isLatest(layer: string, token: number): boolean {
    return this.tokens.get(layer) === token;
  }

  private jumpTo(entry: HistoryEntry): void {
    this.history.push({ snapshotId: this.view.snapshotId, polygon: this.view.polygon });
    this.future = [];
    this.view.snapshotId = entry.snapshotId;
    this.view.polygon = entry.polygon;
  }

  /** Ancestor snapshot where vertex k already sat at the target, if any. */
  findAncestorWithVertex(k: number, target: WirePoint): HistoryEntry | null {
    for (let i = this.history.length - 1; i >= 0; i--) {
      const entry = this.history[i];
      if (samePoint(entry.polygon.vertices[k - 1], target)) return entry;
    }
    return null;
  }

  async dragVertex(k: number, target: WirePoint): Promise<{ clamped: boolean; rejoined: boolean }> {
    const ancestor = this.findAncestorWithVertex(k, target);
    if (ancestor) {
      this.jumpTo(ancestor);
      return { clamped: false, rejoined: true };
    }
    const res = await this.client.project(this.view.snapshotId, k, target);
    this.jumpTo({ snapshotId: res.id, polygon: res.polygon });
    return { clamped: res.clamped, rejoined: false };
  }

  undo(): boolean {
    const prev = this.history.pop();
    if (!prev) return false;
    this.future.push({ snapshotId: this.view.snapshotId, polygon: this.view.polygon });
    this.view.snapshotId = prev.snapshotId;
    this.view.polygon = prev.polygon;
    return true;
  }

  redo(): boolean {
    const nxt = this.future.pop();
    if (!nxt) return false;
    this.history.push({ snapshotId: this.view.snapshotId, polygon: this.view.polygon });
    this.view.snapshotId = nxt.snapshotId;
    this.view.polygon = nxt.polygon;
    return true;
  }
}
