/**
 * Explorer wiring: canvas, layer toggles, sliders, vertex dragging, and the
 * chord-count probe.  All geometry comes from the service; this module only
 * routes responses to the renderer.
 */

import { ApiError, Client, type ChainLayer, type EquidistantLayer, type EssBranchDoc, type NchordsLayer, type SceneDoc } from "./api.js";
import {
  chainCommands,
  equidistantCommands,
  essCommands,
  fitCamera,
  polygonCommands,
  toScreen,
  type Camera,
  type DrawCommand,
} from "./render.js";
import { snapToGrid, type WirePoint } from "./rational.js";
import { ExplorerState } from "./state.js";

const API_BASE = (window as unknown as { CPOS_API?: string }).CPOS_API ?? "http://127.0.0.1:8437";
const TOGGLABLE = ["ae", "css", "equidistant", "ess", "pd", "n_points", "area_parallel", "rass"];

const DEFAULT_POLYGON = {
  vertices: [
    ["2", "0"], ["1", "2"], ["-1", "2"], ["-2", "0"], ["-1", "-2"], ["1", "-2"],
  ] as WirePoint[],
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

class Explorer {
  private cam!: Camera;
  private commands: DrawCommand[] = [];
  private badge: { x: number; y: number; n: number } | null = null;
  private dragging: number | null = null;

  constructor(
    private state: ExplorerState,
    private client: Client,
    private canvas: HTMLCanvasElement,
    private banner: HTMLElement,
  ) {
    this.cam = fitCamera(state.view.polygon, canvas.width, canvas.height);
  }

  worldFromScreen(sx: number, sy: number): WirePoint {
    const x = this.cam.cx + (sx - this.cam.width / 2) / this.cam.scale;
    const y = this.cam.cy - (sy - this.cam.height / 2) / this.cam.scale;
    // snap to the exact 1/256 grid so requests stay rational and cacheable
    return [snapToGrid(x), snapToGrid(y)];
  }

  nearestVertex(sx: number, sy: number): number | null {
    const verts = this.state.view.polygon.vertices;
    let best: number | null = null;
    let bestD = 13 * 13;
    verts.forEach((v, i) => {
      const s = toScreen(this.cam, v);
      const d = (s.x - sx) ** 2 + (s.y - sy) ** 2;
      if (d < bestD) {
        bestD = d;
        best = i + 1;
      }
    });
    return best;
  }

  async refresh(): Promise<void> {
    const features = [...this.state.view.layers];
    if (!features.length) {
      this.commands = polygonCommands(this.cam, this.state.view.polygon);
      this.paint();
      return;
    }
    const token = this.state.nextToken("scene");
    let doc: SceneDoc;
    try {
      doc = await this.client.scene(this.state.snapshotId, features, this.state.params());
    } catch (err) {
      this.showBanner(err instanceof ApiError ? `refused: ${err.kind}` : String(err));
      return;
    }
    if (!this.state.isLatest("scene", token)) return; // superseded request
    const refusals = Object.entries(doc.refusals);
    this.showBanner(
      refusals.length ? refusals.map(([f, r]) => `${f}: ${r.kind}`).join(" · ") : "",
    );
    const cmds = polygonCommands(this.cam, doc.polygon);
    for (const name of ["ae", "css"]) {
      if (doc.layers[name]) cmds.push(...chainCommands(this.cam, name, doc.layers[name] as ChainLayer));
    }
    if (doc.layers.equidistant) {
      cmds.push(...equidistantCommands(this.cam, doc.layers.equidistant as EquidistantLayer));
    }
    for (const name of ["ess", "rass"]) {
      const layer = doc.layers[name] as { branches: EssBranchDoc[] } | undefined;
      if (layer) cmds.push(...essCommands(this.cam, layer.branches));
    }
    const pd = doc.layers.pd as { vertices: WirePoint[]; n_points: WirePoint[] } | undefined;
    if (pd) {
      cmds.push({
        kind: "polyline", layer: "pd", color: "#444444", closed: true, dashed: true,
        points: pd.vertices.map((p) => toScreen(this.cam, p)),
      });
      cmds.push({ kind: "dots", layer: "pd", color: "#e07b00", points: pd.n_points.map((p) => toScreen(this.cam, p)) });
    }
    const ap = doc.layers.area_parallel as { chains: ChainLayer[] } | undefined;
    if (ap) for (const chain of ap.chains) cmds.push(...chainCommands(this.cam, "area_parallel", chain));
    const np = doc.layers.n_points as { points: WirePoint[] } | undefined;
    if (np) cmds.push({ kind: "dots", layer: "n_points", color: "#e07b00", points: np.points.map((p) => toScreen(this.cam, p)) });
    this.commands = cmds;
    this.paint();
  }

  async probe(sx: number, sy: number): Promise<void> {
    const at = this.worldFromScreen(sx, sy);
    const token = this.state.nextToken("probe");
    try {
      const doc = await this.client.scene(this.state.snapshotId, ["nchords"], { at: at.join(",") });
      if (!this.state.isLatest("probe", token)) return;
      const layer = doc.layers.nchords as NchordsLayer | undefined;
      if (layer) {
        this.badge = { x: sx, y: sy, n: layer.n };
      } else {
        this.badge = null; // outside the polygon: hide the badge
      }
    } catch {
      this.badge = null;
    }
    this.paint();
  }

  async drag(k: number, sx: number, sy: number): Promise<void> {
    const target = this.worldFromScreen(sx, sy);
    try {
      const res = await this.state.dragVertex(k, target);
      this.showBanner(res.clamped ? "clamped: a side length hit its floor" : "");
    } catch (err) {
      this.showBanner(err instanceof ApiError ? `refused: ${err.kind}` : String(err));
      return;
    }
    await this.refresh();
  }

  private showBanner(text: string): void {
    this.banner.textContent = text;
    this.banner.style.display = text ? "block" : "none";
  }

  paint(): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    ctx.clearRect(0, 0, this.canvas.width, this.canvas.height);
    for (const cmd of this.commands) {
      ctx.strokeStyle = cmd.color;
      ctx.fillStyle = cmd.color;
      ctx.lineWidth = cmd.layer === "polygon" ? 2 : 1.5;
      ctx.setLineDash(cmd.dashed ? [6, 4] : []);
      if (cmd.kind === "dots") {
        for (const p of cmd.points) {
          ctx.beginPath();
          ctx.arc(p.x, p.y, 3.5, 0, 2 * Math.PI);
          ctx.fill();
        }
        continue;
      }
      ctx.beginPath();
      cmd.points.forEach((p, i) => (i ? ctx.lineTo(p.x, p.y) : ctx.moveTo(p.x, p.y)));
      if (cmd.closed) ctx.closePath();
      ctx.stroke();
    }
    ctx.setLineDash([]);
    if (this.badge) {
      ctx.fillStyle = "#222";
      ctx.fillRect(this.badge.x + 8, this.badge.y - 22, 34, 18);
      ctx.fillStyle = "#fff";
      ctx.font = "12px sans-serif";
      ctx.fillText(`N=${this.badge.n}`, this.badge.x + 12, this.badge.y - 9);
    }
  }

  bind(): void {
    this.canvas.addEventListener("mousedown", (ev) => {
      this.dragging = this.nearestVertex(ev.offsetX, ev.offsetY);
    });
    this.canvas.addEventListener("mouseup", (ev) => {
      if (this.dragging !== null) {
        void this.drag(this.dragging, ev.offsetX, ev.offsetY);
        this.dragging = null;
      }
    });
    this.canvas.addEventListener("mousemove", (ev) => {
      if (this.dragging === null) void this.probe(ev.offsetX, ev.offsetY);
    });
  }
}

async function boot(): Promise<void> {
  const canvas = el<HTMLCanvasElement>("view");
  const banner = el<HTMLElement>("banner");
  const client = new Client(API_BASE);
  const snap = await client.postPolygon(DEFAULT_POLYGON);
  const state = new ExplorerState(client, snap);
  const explorer = new Explorer(state, client, canvas, banner);
  explorer.bind();

  const toggles = el<HTMLElement>("toggles");
  for (const name of TOGGLABLE) {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = state.view.layers.has(name);
    box.addEventListener("change", () => {
      state.toggleLayer(name);
      void explorer.refresh();
    });
    label.append(box, ` ${name}`);
    toggles.append(label);
  }
  const bindSlider = (id: string, apply: (v: string) => void) => {
    const slider = el<HTMLInputElement>(id);
    slider.addEventListener("input", () => {
      apply(snapToGrid(Number(slider.value)));
      void explorer.refresh();
    });
  };
  bindSlider("slider-t", (v) => (state.view.t = v));
  bindSlider("slider-level", (v) => (state.view.level = v));
  el<HTMLButtonElement>("undo").addEventListener("click", () => {
    if (state.undo()) void explorer.refresh();
  });
  el<HTMLButtonElement>("redo").addEventListener("click", () => {
    if (state.redo()) void explorer.refresh();
  });
  await explorer.refresh();
}

if (typeof document !== "undefined" && document.getElementById("view")) {
  void boot();
}
