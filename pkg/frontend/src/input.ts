/** Pilot input: keyboard/gamepad axes normalized to [-1, 1], scaled by the
 * configured speed limits, and emitted as cmd messages at a fixed cadence. */

import { CommandMessage, PROTOCOL_VERSION } from "./protocol.js";

export interface SpeedLimits {
  vMax: number;       // m/s, per translational axis
  yawRateMax: number; // rad/s, hint channel only (yaw stays autonomous)
}

export const DEFAULT_LIMITS: SpeedLimits = { vMax: 2.0, yawRateMax: 2.0 };

export const SEND_HZ = 20;

/** Normalized stick state; every axis lives in [-1, 1]. */
export interface Axes {
  vx: number;
  vy: number;
  vz: number;
  yaw: number;
}

export const ZERO_AXES: Axes = { vx: 0, vy: 0, vz: 0, yaw: 0 };

const KEY_AXES: Record<string, Partial<Axes>> = {
  KeyW: { vx: 1 },
  ArrowUp: { vx: 1 },
  KeyS: { vx: -1 },
  ArrowDown: { vx: -1 },
  KeyA: { vy: 1 },
  ArrowLeft: { vy: 1 },
  KeyD: { vy: -1 },
  ArrowRight: { vy: -1 },
  KeyR: { vz: 1 },
  KeyF: { vz: -1 },
  KeyQ: { yaw: 1 },
  KeyE: { yaw: -1 },
};

/** Fold the currently pressed keys into stick axes. Opposing keys cancel;
 * the result is already normalized because each key contributes at most 1. */
export function keysToAxes(pressed: Set<string>): Axes {
  const axes = { ...ZERO_AXES };
  for (const code of pressed) {
    const contrib = KEY_AXES[code];
    if (!contrib) continue;
    for (const [axis, v] of Object.entries(contrib)) {
      axes[axis as keyof Axes] = clamp(axes[axis as keyof Axes] + v, -1, 1);
    }
  }
  return axes;
}

/** Standard-mapping gamepad: left stick drives vx/vy (stick up = +forward),
 * shoulder triggers drive vz, right stick x is the yaw hint. */
export function gamepadToAxes(axes: number[], deadzone = 0.12): Axes {
  const dz = (v: number | undefined) =>
    v === undefined || Math.abs(v) < deadzone ? 0 : clamp(-v, -1, 1) || 0;
  return {
    vx: dz(axes[1]),
    vy: dz(axes[0]),
    vz: dz(axes[3]),
    yaw: dz(axes[2]),
  };
}

export function inputToCommand(axes: Axes, limits: SpeedLimits, stamp: number): CommandMessage {
  return {
    v: PROTOCOL_VERSION,
    type: "cmd",
    vx: clamp(axes.vx, -1, 1) * limits.vMax,
    vy: clamp(axes.vy, -1, 1) * limits.vMax,
    vz: clamp(axes.vz, -1, 1) * limits.vMax,
    yaw_rate: clamp(axes.yaw, -1, 1) * limits.yawRateMax,
    stamp,
  };
}

export function isActive(axes: Axes): boolean {
  return axes.vx !== 0 || axes.vy !== 0 || axes.vz !== 0 || axes.yaw !== 0;
}

/** Drives the 20 Hz send cadence: commands flow while any axis is live, and
 * exactly one zero command goes out when the sticks return to center, so the
 * server's dead-man never has to guess. Clock and timer are injectable so
 * tests can run it without wall time. */
export class CommandScheduler {
  private axes: Axes = ZERO_AXES;
  private wasActive = false;
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(
    private readonly send: (cmd: CommandMessage) => void,
    private readonly limits: SpeedLimits = DEFAULT_LIMITS,
    private readonly now: () => number = () => performance.now() / 1000,
  ) {}

  start(): void {
    if (this.timer === null) {
      this.timer = setInterval(() => this.tick(), 1000 / SEND_HZ);
    }
  }

  stop(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  setAxes(axes: Axes): void {
    this.axes = axes;
  }

  /** One cadence step; exposed for tests. */
  tick(): void {
    const active = isActive(this.axes);
    if (active || this.wasActive) {
      this.send(inputToCommand(this.axes, this.limits, this.now()));
    }
    this.wasActive = active;
  }
}

function clamp(v: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, v));
}
