/**
 * Pure projection from service layers to screen-space draw commands.
 *
 * Kept free of canvas state so tests can compare the exact pixel
 * coordinates two layers produce under one camera.
 */

import type { ChainLayer, EquidistantLayer, EssBranchDoc, PolygonDoc } from "./api.js";
import { pointToXY, type WirePoint } from "./rational.js";

export interface Camera {
  scale: number; // world units -> px
  cx: number; // world center
  cy: number;
  width: number;
  height: number;
}

export interface ScreenPoint {
  x: number;
  y: number;
}

export interface DrawCommand {
  kind: "polyline" | "dots";
  layer: string;
  color: string;
  closed?: boolean;
  dashed?: boolean;
  points: ScreenPoint[];
}

export const LAYER_COLORS: Record<string, string> = {
  polygon: "#111111",
  diagonals: "#9a9a9a",
  ae: "#1f5fd0",
  css: "#d02020",
  equidistant: "#1d8a3c",
  ess: "#7a1fd0",
  area_parallel: "#e07b00",
};

export function fitCamera(polygon: PolygonDoc, width: number, height: number): Camera {
  const pts = polygon.vertices.map(pointToXY);
  const xs = pts.map((p) => p.x);
  const ys = pts.map((p) => p.y);
  const x0 = Math.min(...xs), x1 = Math.max(...xs);
  const y0 = Math.min(...ys), y1 = Math.max(...ys);
  const span = Math.max(x1 - x0, y1 - y0) || 1;
  return {
    scale: (0.8 * Math.min(width, height)) / span,
    cx: (x0 + x1) / 2,
    cy: (y0 + y1) / 2,
    width,
    height,
  };
}

export function toScreen(cam: Camera, p: WirePoint): ScreenPoint {
  const { x, y } = pointToXY(p);
  return {
    x: Math.round(cam.width / 2 + (x - cam.cx) * cam.scale),
    y: Math.round(cam.height / 2 - (y - cam.cy) * cam.scale),
  };
}

export function polygonCommands(cam: Camera, polygon: PolygonDoc): DrawCommand[] {
  return [
    {
      kind: "polyline",
      layer: "polygon",
      color: LAYER_COLORS.polygon,
      closed: true,
      points: polygon.vertices.map((p) => toScreen(cam, p)),
    },
  ];
}

export function chainCommands(cam: Camera, layer: string, chain: ChainLayer): DrawCommand[] {
  const pts = chain.points.map((p) => toScreen(cam, p));
  const color = LAYER_COLORS[layer] ?? "#333333";
  if (pts.length === 1) {
    return [{ kind: "dots", layer, color, points: pts }];
  }
  const out: DrawCommand[] = [
    { kind: "polyline", layer, color, closed: chain.closed, points: pts },
  ];
  if (chain.cusps) {
    const cuspPts = pts.filter((_, i) => chain.cusps![i]);
    if (cuspPts.length) out.push({ kind: "dots", layer, color, points: cuspPts });
  }
  return out;
}

export function equidistantCommands(
  cam: Camera,
  layer: EquidistantLayer,
): DrawCommand[] {
  return chainCommands(cam, "equidistant", {
    points: layer.points,
    closed: layer.closed,
    cusps: layer.cusps,
  });
}

export function essCommands(cam: Camera, branches: EssBranchDoc[]): DrawCommand[] {
  const out: DrawCommand[] = [];
  for (const br of branches) {
    for (const seg of br.segments) {
      out.push({
        kind: "polyline",
        layer: "ess",
        color: LAYER_COLORS.ess,
        points: seg.points.map((p) => toScreen(cam, p)),
      });
    }
    if (br.endpoints.length) {
      out.push({
        kind: "dots",
        layer: "ess",
        color: LAYER_COLORS.ess,
        points: br.endpoints.map((p) => toScreen(cam, p)),
      });
    }
  }
  return out;
}

/** The pixel trace of a command list: the set of rounded segment endpoints. */
export function pixelTrace(cmds: DrawCommand[]): Set<string> {
  const out = new Set<string>();
  for (const cmd of cmds) {
    const pts = cmd.points;
    if (cmd.kind === "dots") {
      for (const p of pts) out.add(`${p.x},${p.y}`);
      continue;
    }
    const m = pts.length;
    const last = cmd.closed ? m : m - 1;
    for (let i = 0; i < last; i++) {
      const a = pts[i];
      const b = pts[(i + 1) % m];
      const key = a.x <= b.x || (a.x === b.x && a.y <= b.y)
        ? `${a.x},${a.y}-${b.x},${b.y}`
        : `${b.x},${b.y}-${a.x},${a.y}`;
      out.add(key);
    }
  }
  return out;
}
