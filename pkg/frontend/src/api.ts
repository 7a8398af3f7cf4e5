/**
 * Typed client for the polygon service.  Every rendered coordinate in the
 * explorer originates from these responses; the client itself computes
 * nothing.
 */

import type { WirePoint } from "./rational.js";

export interface PolygonDoc {
  vertices: WirePoint[];
}

export interface Snapshot {
  id: string;
  n: number;
  polygon: PolygonDoc;
}

export interface ChainLayer {
  points: WirePoint[];
  closed: boolean;
  cusps: boolean[] | null;
  degenerate?: string;
}

export interface EquidistantLayer {
  t: string;
  points: WirePoint[];
  cusps: boolean[];
  closed: boolean;
}

export interface EssSegmentDoc {
  pair: [number, number];
  t_range: [string, string];
  points: [WirePoint, WirePoint];
}

export interface EssBranchDoc {
  segments: EssSegmentDoc[];
  endpoint_kinds: string[];
  endpoints: WirePoint[];
  junction_cusps: boolean[];
}

export interface NchordsLayer {
  at: WirePoint;
  n: number;
}

export interface SceneDoc {
  id: string;
  polygon: PolygonDoc;
  layers: Record<string, unknown>;
  refusals: Record<string, { kind: string; index?: number }>;
}

export interface ProjectResponse {
  id: string;
  polygon: PolygonDoc;
  clamped: boolean;
}

export interface SceneParams {
  t?: string;
  level?: string;
  mu?: string;
  at?: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public kind: string,
  ) {
    super(`${status}: ${kind}`);
  }
}

async function parseFailure(res: Response): Promise<never> {
  let kind = "Unknown";
  try {
    const body = await res.json();
    kind = body?.detail?.error?.kind ?? body?.error?.kind ?? kind;
  } catch {
    /* non-JSON body */
  }
  throw new ApiError(res.status, kind);
}

export class Client {
  constructor(
    private base: string,
    private fetcher: typeof fetch = fetch,
  ) {}

  async postPolygon(doc: PolygonDoc): Promise<Snapshot> {
    const res = await this.fetcher(`${this.base}/api/polygon`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(doc),
    });
    if (!res.ok) return parseFailure(res);
    return res.json();
  }

  async scene(id: string, features: string[], params: SceneParams = {}): Promise<SceneDoc> {
    const q = new URLSearchParams({ features: features.join(",") });
    for (const [k, v] of Object.entries(params)) {
      if (v !== undefined) q.set(k, v);
    }
    const res = await this.fetcher(`${this.base}/api/scene/${id}?${q.toString()}`);
    if (!res.ok) return parseFailure(res);
    return res.json();
  }

  async project(id: string, vertex: number, target: WirePoint): Promise<ProjectResponse> {
    const res = await this.fetcher(`${this.base}/api/project`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ id, vertex, target }),
    });
    if (!res.ok) return parseFailure(res);
    return res.json();
  }

  async health(): Promise<{ service: string; version: string }> {
    const res = await this.fetcher(`${this.base}/api/health`);
    if (!res.ok) return parseFailure(res);
    return res.json();
  }
}
