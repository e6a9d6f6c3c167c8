/** Browser entry point: wires the session, input, and canvas panels
 * together. All decision logic lives in the imported modules; this file is
 * only DOM plumbing and drawing. */

import { CommandScheduler, DEFAULT_LIMITS, gamepadToAxes, keysToAxes } from "./input.js";
import { websocketTransport } from "./net.js";
import {
  FrameView,
  SeqTracker,
  TopDownView,
  buildFrameView,
  depthStripPixels,
} from "./render.js";
import { Session } from "./session.js";

const params = new URLSearchParams(location.search);
const url = params.get("bridge") ?? "ws://127.0.0.1:8764";
const role = params.get("role") === "observer" ? "observer" : "pilot";

const $ = (id: string) => document.getElementById(id)!;
const canvas = (id: string) => $(id) as HTMLCanvasElement;
const ctx2d = (id: string) => canvas(id).getContext("2d")!;

let topDown: TopDownView | null = null;
const seqTracker = new SeqTracker();
let view: FrameView | null = null;

const session = new Session({
  role,
  transport: websocketTransport(url),
  onFrame: (frame) => {
    try {
      view = buildFrameView(frame, topDown, seqTracker);
      topDown = view.topDown;
    } catch (err) {
      console.warn("skipping telemetry frame:", err);
    }
  },
  onStatus: (status, detail) => {
    $("banner").textContent =
      status === "connected" ? `${role} @ ${url}` : `${status}${detail ? `: ${detail}` : ""}`;
    $("banner").className = status;
  },
  onServerError: (msg) => console.warn("bridge:", msg),
});
void session.connect();

// -- input --

const pressed = new Set<string>();
const scheduler = new CommandScheduler((cmd) => session.send(cmd), DEFAULT_LIMITS);
if (role === "pilot") scheduler.start();

window.addEventListener("keydown", (e) => {
  pressed.add(e.code);
  scheduler.setAxes(keysToAxes(pressed));
});
window.addEventListener("keyup", (e) => {
  pressed.delete(e.code);
  scheduler.setAxes(keysToAxes(pressed));
});
window.addEventListener("blur", () => {
  pressed.clear();
  scheduler.setAxes(keysToAxes(pressed));
});

function pollGamepad(): void {
  const pad = navigator.getGamepads?.()[0];
  if (pad && pressed.size === 0) {
    scheduler.setAxes(gamepadToAxes([...pad.axes]));
  }
}

// -- drawing --

function drawTopDown(v: FrameView): void {
  const c = ctx2d("map");
  const { width: W, height: H } = canvas("map");
  c.clearRect(0, 0, W, H);
  const pts = [...v.topDown.gtTrail, ...v.topDown.estTrail];
  if (pts.length === 0) return;
  const xs = pts.map((p) => p.x);
  const ys = pts.map((p) => p.y);
  const pad = 2;
  const xlo = Math.min(...xs) - pad, xhi = Math.max(...xs) + pad;
  const ylo = Math.min(...ys) - pad, yhi = Math.max(...ys) + pad;
  const s = Math.min(W / (xhi - xlo), H / (yhi - ylo));
  const px = (x: number) => (x - xlo) * s;
  const py = (y: number) => H - (y - ylo) * s;

  const polyline = (trail: { x: number; y: number }[], style: string) => {
    c.strokeStyle = style;
    c.beginPath();
    trail.forEach((p, i) => (i === 0 ? c.moveTo(px(p.x), py(p.y)) : c.lineTo(px(p.x), py(p.y))));
    c.stroke();
  };
  if (v.topDown.sfcRect) {
    const r = v.topDown.sfcRect;
    c.strokeStyle = "#2a6";
    c.strokeRect(px(r.xlo), py(r.yhi), (r.xhi - r.xlo) * s, (r.yhi - r.ylo) * s);
  }
  polyline(v.topDown.gtTrail, "#09f");
  polyline(v.topDown.estTrail, "#f80");
  const h = v.topDown.heading;
  c.strokeStyle = "#fff";
  c.beginPath();
  c.moveTo(px(h.from.x), py(h.from.y));
  c.lineTo(px(h.to.x), py(h.to.y));
  c.stroke();
}

function drawPolar(v: FrameView): void {
  const c = ctx2d("polar");
  const { width: W, height: H } = canvas("polar");
  c.clearRect(0, 0, W, H);
  const cx = W / 2, cy = H / 2, R = Math.min(W, H) / 2 - 6;
  c.strokeStyle = "#444";
  c.beginPath();
  c.arc(cx, cy, R, 0, 2 * Math.PI);
  c.stroke();
  c.strokeStyle = "#09f";
  c.beginPath();
  v.polar.spokes.forEach((sp, i) => {
    const x = cx + R * sp.radius * Math.cos(sp.psi);
    const y = cy - R * sp.radius * Math.sin(sp.psi);
    i === 0 ? c.moveTo(x, y) : c.lineTo(x, y);
  });
  c.closePath();
  c.stroke();
  const best = v.polar.spokes[v.polar.argminIndex];
  if (best) {
    c.fillStyle = "#0f6";
    c.beginPath();
    c.arc(cx + R * best.radius * Math.cos(best.psi), cy - R * best.radius * Math.sin(best.psi), 4, 0, 2 * Math.PI);
    c.fill();
  }
  c.strokeStyle = "#f80";
  c.beginPath();
  c.moveTo(cx, cy);
  c.lineTo(cx + R * Math.cos(v.polar.currentYaw), cy - R * Math.sin(v.polar.currentYaw));
  c.stroke();
}

function drawDepth(v: FrameView): void {
  const c = ctx2d("depth");
  const { height, width } = v.depth;
  const levels = depthStripPixels(v.depth);
  const pix = new ImageData(width, height);
  for (let i = 0; i < height * width; i++) {
    const g = levels[i]!;
    pix.data[4 * i] = g;
    pix.data[4 * i + 1] = g;
    pix.data[4 * i + 2] = g;
    pix.data[4 * i + 3] = 255;
  }
  void createImageBitmap(pix).then((bmp) => {
    const cv = canvas("depth");
    c.imageSmoothingEnabled = false;
    c.drawImage(bmp, 0, 0, cv.width, cv.height);
  });
}

function drawGauges(v: FrameView): void {
  const host = $("gauges");
  host.innerHTML = "";
  for (const g of v.gauges) {
    const row = document.createElement("div");
    row.className = "gauge";
    row.innerHTML = `<span class="label">${g.label}</span>
      <span class="bar"><span class="fill" style="width:${(100 * g.frac).toFixed(1)}%"></span></span>
      <span class="value">${g.value.toPrecision(4)}</span>`;
    host.appendChild(row);
  }
  $("drift").textContent = `drift ${v.driftM.toFixed(2)} m`;
  $("timing").textContent = `${v.timingMs.toFixed(1)} ms/step` +
    (seqTracker.dropped > 0 ? ` (${seqTracker.dropped} frames dropped)` : "");
}

function renderLoop(): void {
  pollGamepad();
  if (view) {
    drawTopDown(view);
    drawPolar(view);
    drawDepth(view);
    drawGauges(view);
  }
  requestAnimationFrame(renderLoop);
}
requestAnimationFrame(renderLoop);
