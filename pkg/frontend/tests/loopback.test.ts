/** End-to-end loopback against the real bridge: spawns the Python CLI
 * serving a hover episode, pilots it over TCP at 20 Hz, and checks cadence,
 * dead-man decay, and that the commands landed in the episode log. */
import { ChildProcess, spawn } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { CommandScheduler, DEFAULT_LIMITS } from "../src/input.js";
import { tcpTransport } from "../src/net.js";
import { TelemetryFrame } from "../src/protocol.js";
import { Session } from "../src/session.js";

const EPISODE_S = 14;

let dir: string;
let server: ChildProcess;
let serverExit: Promise<number | null>;
let port: number;
const frames: TelemetryFrame[] = [];

function run(args: string[], cwd: string): Promise<void> {
  return new Promise((resolve, reject) => {
    const p = spawn("python3", ["-m", "activeyaw.cli", ...args], { cwd });
    let err = "";
    p.stderr.on("data", (d) => (err += d));
    p.on("exit", (code) => (code === 0 ? resolve() : reject(new Error(err))));
  });
}

beforeAll(async () => {
  dir = mkdtempSync(join(tmpdir(), "cockpit-"));
  writeFileSync(join(dir, "cfg.yaml"), [
    "profile:",
    "  fast: true",
    "episode:",
    `  duration: ${EPISODE_S}.0`,
    "  estimator: oracle",
    "",
  ].join("\n"));
  await run(["gen-scene", "--kind", "box_room", "--out", join(dir, "scene")], dir);

  server = spawn("python3", [
    "-m", "activeyaw.cli", "--config", join(dir, "cfg.yaml"),
    "serve", "--scene", join(dir, "scene"), "--port", "0",
    "--out", join(dir, "episode.log"),
  ], { cwd: dir });
  serverExit = new Promise((resolve) => server.on("exit", resolve));
  let stderr = "";
  server.stderr!.on("data", (d) => (stderr += d));

  port = await new Promise<number>((resolve, reject) => {
    let out = "";
    server.stdout!.on("data", (d) => {
      out += d;
      const m = out.match(/on port (\d+)/);
      if (m) resolve(parseInt(m[1]!, 10));
    });
    server.on("exit", () => reject(new Error(`server died early: ${stderr}`)));
    setTimeout(() => reject(new Error("server never reported a port")), 30000);
  });
}, 60000);

afterAll(() => {
  server?.kill();
});

describe("bridge loopback", () => {
  it("pilots the live episode end to end", async () => {
    const session = new Session({
      role: "pilot",
      transport: tcpTransport("127.0.0.1", port),
      onFrame: (f) => frames.push(f),
    });
    await session.connect();
    expect(session.status).toBe("connected");

    // phase A: hold forward half-stick for 2 s and measure the send cadence
    const sendTimes: number[] = [];
    const scheduler = new CommandScheduler((cmd) => {
      sendTimes.push(performance.now());
      session.send(cmd);
    }, DEFAULT_LIMITS);
    scheduler.setAxes({ vx: 0.5, vy: 0, vz: 0, yaw: 0 });
    scheduler.start();
    await sleep(2000);

    // phase B: vanish without a release command; the dead-man must brake
    scheduler.stop();
    await sleep(1500);
    session.close();

    const hz = (sendTimes.length - 1) /
      ((sendTimes[sendTimes.length - 1]! - sendTimes[0]!) / 1000);
    expect(hz).toBeGreaterThan(18);
    expect(hz).toBeLessThan(22);

    // telemetry echoed the applied command: half stick * 2 m/s limit
    const driven = frames.filter((f) => Math.abs(f.cmd_echo[0]! - 1.0) < 1e-9);
    expect(driven.length).toBeGreaterThanOrEqual(10);

    // dead-man: echo returns to zero within 500 ms (plus one control step)
    const lastDriven = driven[driven.length - 1]!;
    const firstZeroAfter = frames.find(
      (f) => f.stamp > lastDriven.stamp && f.cmd_echo[0] === 0);
    expect(firstZeroAfter).toBeDefined();
    expect(firstZeroAfter!.stamp - lastDriven.stamp).toBeLessThanOrEqual(0.7);

    // telemetry streams at the control rate with monotone seq
    for (let i = 1; i < frames.length; i++) {
      expect(frames[i]!.seq).toBeGreaterThan(frames[i - 1]!.seq);
    }
    expect(frames.length).toBeGreaterThan(25);
  }, 30000);

  it("recorded the piloted commands in the episode log", async () => {
    await serverExit;
    const lines = readFileSync(join(dir, "episode.log"), "utf-8").trim().split("\n");
    const steps = lines.slice(1).map((l) => JSON.parse(l))
      .filter((o) => Array.isArray(o.cmd));
    expect(steps.length).toBe(EPISODE_S * 10);

    // ~2 s of driving at 10 Hz control steps, all at the clamped 1.0 m/s
    const driven = steps.filter((s) => Math.abs(s.cmd[0] - 1.0) < 1e-9);
    expect(driven.length).toBeGreaterThanOrEqual(15);
    expect(driven.length).toBeLessThanOrEqual(27);

    // everything after the dead-man fired is a zero command
    const lastDriven = steps.lastIndexOf(driven[driven.length - 1]);
    const tail = steps.slice(lastDriven + 8);
    expect(tail.length).toBeGreaterThan(0);
    for (const s of tail) expect(s.cmd).toEqual([0, 0, 0, 0]);
  }, 30000);
});

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}
