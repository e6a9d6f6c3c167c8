import { describe, expect, it } from "vitest";

import {
  Axes,
  CommandScheduler,
  DEFAULT_LIMITS,
  ZERO_AXES,
  gamepadToAxes,
  inputToCommand,
  keysToAxes,
} from "../src/input.js";

describe("keysToAxes", () => {
  it("maps WASD to body axes", () => {
    expect(keysToAxes(new Set(["KeyW"]))).toEqual({ vx: 1, vy: 0, vz: 0, yaw: 0 });
    expect(keysToAxes(new Set(["KeyS", "KeyA"]))).toEqual({ vx: -1, vy: 1, vz: 0, yaw: 0 });
  });

  it("cancels opposing keys", () => {
    expect(keysToAxes(new Set(["KeyW", "KeyS"]))).toEqual(ZERO_AXES);
  });

  it("ignores unbound keys", () => {
    expect(keysToAxes(new Set(["KeyZ", "Space"]))).toEqual(ZERO_AXES);
  });
});

describe("gamepadToAxes", () => {
  it("applies the deadzone and inverts stick-down", () => {
    expect(gamepadToAxes([0.05, -1, 0, 0])).toEqual({ vx: 1, vy: 0, vz: 0, yaw: 0 });
  });

  it("passes half deflection through linearly", () => {
    expect(gamepadToAxes([-0.5, 0, 0, 0]).vy).toBeCloseTo(0.5);
  });
});

describe("inputToCommand", () => {
  it("emits a zero command for centered sticks", () => {
    const cmd = inputToCommand(ZERO_AXES, DEFAULT_LIMITS, 1.0);
    expect([cmd.vx, cmd.vy, cmd.vz, cmd.yaw_rate]).toEqual([0, 0, 0, 0]);
    expect(cmd.stamp).toBe(1.0);
  });

  it("scales full deflection to the limit", () => {
    const cmd = inputToCommand({ vx: 1, vy: 0, vz: 0, yaw: 0 }, { vMax: 2, yawRateMax: 1 }, 0);
    expect(cmd.vx).toBe(2);
  });

  it("scales half deflection linearly and clamps overshoot", () => {
    const cmd = inputToCommand({ vx: 0.5, vy: 3, vz: 0, yaw: 0 }, { vMax: 2, yawRateMax: 1 }, 0);
    expect(cmd.vx).toBe(1);
    expect(cmd.vy).toBe(2);
  });
});

describe("CommandScheduler", () => {
  function run(axesByTick: Axes[]): number[][] {
    const sent: number[][] = [];
    const sched = new CommandScheduler((c) => sent.push([c.vx, c.vy, c.vz, c.yaw_rate]),
                                       DEFAULT_LIMITS, () => 0);
    for (const axes of axesByTick) {
      sched.setAxes(axes);
      sched.tick();
    }
    return sent;
  }

  it("sends nothing while idle", () => {
    expect(run([ZERO_AXES, ZERO_AXES, ZERO_AXES])).toEqual([]);
  });

  it("sends every tick while active, plus one final zero on release", () => {
    const fwd: Axes = { vx: 1, vy: 0, vz: 0, yaw: 0 };
    const sent = run([ZERO_AXES, fwd, fwd, ZERO_AXES, ZERO_AXES, ZERO_AXES]);
    expect(sent).toEqual([[2, 0, 0, 0], [2, 0, 0, 0], [0, 0, 0, 0]]);
  });
});
