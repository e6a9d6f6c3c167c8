/** Pure view models for the cockpit panels. Everything here is plain data
 * in, plain data out; the canvas code in main.ts only draws what these
 * return, which keeps the display logic testable headless. */

import { DepthRecord, TelemetryFrame, decodeDepthRecord } from "./protocol.js";

export interface Point2 {
  x: number;
  y: number;
}

/** Yaw angle of a [x, y, z, qw, qx, qy, qz] pose. */
export function poseYaw(pose: number[]): number {
  const [, , , qw = 1, qx = 0, qy = 0, qz = 0] = pose;
  return Math.atan2(2 * (qw * qz + qx * qy), 1 - 2 * (qy * qy + qz * qz));
}

export function posePosition(pose: number[]): Point2 & { z: number } {
  return { x: pose[0] ?? 0, y: pose[1] ?? 0, z: pose[2] ?? 0 };
}

/** Horizontal distance between the estimated and true body positions; the
 * live stand-in for APE before any trajectory alignment. */
export function driftMeters(frame: TelemetryFrame): number {
  const dx = frame.gt[0]! - frame.est[0]!;
  const dy = frame.gt[1]! - frame.est[1]!;
  const dz = frame.gt[2]! - frame.est[2]!;
  return Math.sqrt(dx * dx + dy * dy + dz * dz);
}

export interface TopDownView {
  gtTrail: Point2[];
  estTrail: Point2[];
  heading: { from: Point2; to: Point2 };
  /** axis-aligned safe-corridor rectangle in the xy plane */
  sfcRect: { xlo: number; ylo: number; xhi: number; yhi: number } | null;
}

const TRAIL_LIMIT = 600;
const HEADING_LEN = 1.5;

/** Fold one frame into the top-down view, appending to the existing trails
 * (pass the previous view, or null on the first frame). */
export function topDownView(frame: TelemetryFrame, prev: TopDownView | null): TopDownView {
  const gt = posePosition(frame.gt);
  const est = posePosition(frame.est);
  const yaw = poseYaw(frame.gt);
  const gtTrail = [...(prev?.gtTrail ?? []), { x: gt.x, y: gt.y }].slice(-TRAIL_LIMIT);
  const estTrail = [...(prev?.estTrail ?? []), { x: est.x, y: est.y }].slice(-TRAIL_LIMIT);
  const [xlo, ylo, , xhi, yhi] = frame.sfc;
  const degenerate = frame.sfc.every((v) => v === 0);
  return {
    gtTrail,
    estTrail,
    heading: {
      from: { x: gt.x, y: gt.y },
      to: { x: gt.x + HEADING_LEN * Math.cos(yaw), y: gt.y + HEADING_LEN * Math.sin(yaw) },
    },
    sfcRect: degenerate ? null : { xlo: xlo!, ylo: ylo!, xhi: xhi!, yhi: yhi! },
  };
}

export interface PolarView {
  /** one spoke per sweep sample, radius normalized to (0, 1] */
  spokes: { psi: number; radius: number; cost: number }[];
  argminIndex: number;
  currentYaw: number;
}

/** The observability curve as a polar plot: cheap directions reach far out,
 * expensive ones collapse toward the center. Costs span orders of magnitude,
 * so the radius is log-scaled between the curve's own min and max. */
export function polarView(frame: TelemetryFrame): PolarView {
  const costs = frame.obs_curve.map((p) => p[1]!);
  let argminIndex = 0;
  for (let i = 1; i < costs.length; i++) {
    if (costs[i]! < costs[argminIndex]!) argminIndex = i;
  }
  const logs = costs.map((c) => Math.log(Math.max(c, 1e-12)));
  const lo = Math.min(...logs);
  const span = Math.max(Math.max(...logs) - lo, 1e-9);
  return {
    spokes: frame.obs_curve.map((p, i) => ({
      psi: p[0]!,
      radius: 1 - 0.85 * ((logs[i]! - lo) / span),
      cost: p[1]!,
    })),
    argminIndex,
    currentYaw: poseYaw(frame.est),
  };
}

/** Grayscale intensities (0..255, row-major) for the depth strip: near
 * returns bright, far dim, invalid bins black. */
export function depthStripPixels(rec: DepthRecord, maxRange = 40): Uint8ClampedArray {
  const out = new Uint8ClampedArray(rec.height * rec.width);
  for (let i = 0; i < out.length; i++) {
    if (!rec.valid[i]) continue;
    const t = Math.min(rec.depth[i]! / maxRange, 1);
    out[i] = Math.round(255 * (1 - t));
  }
  return out;
}

export interface Gauge {
  label: string;
  value: number;
  /** bar fill in [0, 1], log-scaled since the weights span decades */
  frac: number;
}

export const WEIGHT_LABELS = ["q_p", "q_psi", "r_a", "r_psidot", "lambda_obs"] as const;

const GAUGE_LOG_LO = Math.log10(0.01);
const GAUGE_LOG_HI = Math.log10(2000);

/** The five MPC weights plus the applied yaw-rate hint. Values pass through
 * untouched (the replay-fixture tests compare them exactly); only the bar
 * fraction is shaped for display. */
export function gaugeView(frame: TelemetryFrame): Gauge[] {
  const bars: Gauge[] = frame.weights.map((w, i) => ({
    label: WEIGHT_LABELS[i] ?? `w${i}`,
    value: w,
    frac: logFrac(w),
  }));
  bars.push({
    label: "yaw_hint",
    value: frame.cmd_echo[3]!,
    frac: Math.min(Math.abs(frame.cmd_echo[3]!) / 2, 1),
  });
  return bars;
}

function logFrac(w: number): number {
  if (w <= 0) return 0;
  const f = (Math.log10(w) - GAUGE_LOG_LO) / (GAUGE_LOG_HI - GAUGE_LOG_LO);
  return Math.min(Math.max(f, 0), 1);
}

/** Detects dropped telemetry (an observer falling behind drops frames
 * rather than stalling the control loop; the seq numbers expose it). */
export class SeqTracker {
  private last: number | null = null;
  dropped = 0;

  /** Returns the gap size (0 if contiguous). */
  update(seq: number): number {
    const gap = this.last === null ? 0 : Math.max(seq - this.last - 1, 0);
    this.last = seq;
    this.dropped += gap;
    return gap;
  }
}

export interface FrameView {
  topDown: TopDownView;
  polar: PolarView;
  depth: DepthRecord;
  gauges: Gauge[];
  driftM: number;
  timingMs: number;
  seqGap: number;
}

/** Everything one telemetry frame contributes to the display. */
export function buildFrameView(
  frame: TelemetryFrame,
  prevTopDown: TopDownView | null,
  seq: SeqTracker,
): FrameView {
  return {
    topDown: topDownView(frame, prevTopDown),
    polar: polarView(frame),
    depth: decodeDepthRecord(frame.depth_b64),
    gauges: gaugeView(frame),
    driftM: driftMeters(frame),
    timingMs: frame.timing_ms,
    seqGap: seq.update(frame.seq),
  };
}
