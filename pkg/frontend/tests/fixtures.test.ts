/** Replay fixtures recorded from a real headless episode: every frame here
 * came off the bridge's telemetry builder, so these tests pin the cockpit's
 * view models to the server's actual output. */
import { readFileSync } from "node:fs";

import { describe, expect, it } from "vitest";

import { decodeDepthRecord, parseTelemetry } from "../src/protocol.js";
import {
  SeqTracker,
  buildFrameView,
  driftMeters,
  gaugeView,
  polarView,
} from "../src/render.js";

const raw = JSON.parse(
  readFileSync(new URL("./fixtures/telemetry_frames.json", import.meta.url), "utf-8"),
) as Record<string, unknown>[];

describe("replay fixtures", () => {
  it("all parse as valid telemetry", () => {
    for (const msg of raw) expect(() => parseTelemetry(msg)).not.toThrow();
  });

  it("gauges reproduce the frame values exactly", () => {
    for (const msg of raw) {
      const frame = parseTelemetry(msg);
      const gauges = gaugeView(frame);
      expect(gauges.slice(0, 5).map((g) => g.value)).toEqual(frame.weights);
      expect(gauges[5]!.value).toBe(frame.cmd_echo[3]);
    }
  });

  it("depth records decode to a consistent panorama", () => {
    for (const msg of raw) {
      const rec = decodeDepthRecord(parseTelemetry(msg).depth_b64);
      expect(rec.height).toBe(40);
      expect(rec.width).toBe(80);
      // invalid bins are zeroed on the wire
      for (let i = 0; i < rec.depth.length; i++) {
        if (!rec.valid[i]) expect(rec.depth[i]).toBe(0);
      }
    }
  });

  it("oracle frames show zero drift", () => {
    for (const msg of raw) {
      expect(driftMeters(parseTelemetry(msg))).toBeLessThan(1e-9);
    }
  });

  it("polar argmin agrees with a direct scan of the curve", () => {
    for (const msg of raw) {
      const frame = parseTelemetry(msg);
      const v = polarView(frame);
      const costs = frame.obs_curve.map((p) => p[1]!);
      expect(costs[v.argminIndex]).toBe(Math.min(...costs));
    }
  });

  it("frames build complete views with contiguous seq numbers", () => {
    const tracker = new SeqTracker();
    let top = null;
    for (const msg of raw) {
      const view = buildFrameView(parseTelemetry(msg), top, tracker);
      top = view.topDown;
      expect(view.seqGap).toBe(0);
      expect(view.gauges).toHaveLength(6);
    }
    expect(top!.gtTrail).toHaveLength(raw.length);
  });
});
