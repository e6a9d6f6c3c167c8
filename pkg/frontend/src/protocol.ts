/** Bridge wire protocol: length-prefixed UTF-8 JSON frames over a stream
 * socket, plus the binary depth record embedded base64 in telemetry. */

export const PROTOCOL_VERSION = 1;

const MAX_FRAME = 4 * 1024 * 1024;
const textEncoder = new TextEncoder();
const textDecoder = new TextDecoder();

export interface HelloMessage {
  v: number;
  type: "hello";
  role: "pilot" | "observer";
}

export interface CommandMessage {
  v: number;
  type: "cmd";
  vx: number;
  vy: number;
  vz: number;
  yaw_rate: number;
  stamp: number;
}

export interface TelemetryFrame {
  v: number;
  type: "telemetry";
  seq: number;
  stamp: number;
  /** [x, y, z, qw, qx, qy, qz] */
  gt: number[];
  est: number[];
  /** MPC weights [q_p, q_psi, r_a, r_psidot, lambda_obs] */
  weights: number[];
  /** [[psi, cost], ...] over the sweep grid */
  obs_curve: number[][];
  depth_b64: string;
  /** axis-aligned corridor box [xlo, ylo, zlo, xhi, yhi, zhi] */
  sfc: number[];
  /** last applied pilot command [vx, vy, vz, yaw_rate_hint] */
  cmd_echo: number[];
  timing_ms: number;
}

export interface ErrorFrame {
  v: number;
  type: "error";
  error: string;
}

export type BridgeMessage = TelemetryFrame | ErrorFrame | Record<string, unknown>;

export class ProtocolError extends Error {}

/** One frame: ASCII decimal byte length, newline, UTF-8 JSON payload. */
export function encodeMessage(obj: object): Uint8Array {
  const payload = textEncoder.encode(JSON.stringify(obj));
  const header = textEncoder.encode(`${payload.length}\n`);
  const out = new Uint8Array(header.length + payload.length);
  out.set(header, 0);
  out.set(payload, header.length);
  return out;
}

export function makeHello(role: "pilot" | "observer"): HelloMessage {
  return { v: PROTOCOL_VERSION, type: "hello", role };
}

/** Incremental frame parser. feed() accepts arbitrary chunk boundaries and
 * returns every complete message; a corrupt header is unrecoverable (the
 * stream offset is lost) and throws, a corrupt JSON payload is returned as
 * a ProtocolError so the caller can skip it and keep the connection. */
export class FrameDecoder {
  private buf = new Uint8Array(0);

  feed(chunk: Uint8Array): (BridgeMessage | ProtocolError)[] {
    const joined = new Uint8Array(this.buf.length + chunk.length);
    joined.set(this.buf, 0);
    joined.set(chunk, this.buf.length);
    this.buf = joined;

    const out: (BridgeMessage | ProtocolError)[] = [];
    for (;;) {
      const nl = this.buf.indexOf(0x0a);
      if (nl < 0) {
        if (this.buf.length > 20) throw new ProtocolError("unterminated frame header");
        return out;
      }
      const headerText = textDecoder.decode(this.buf.subarray(0, nl));
      if (!/^\d+$/.test(headerText)) throw new ProtocolError(`bad frame header ${JSON.stringify(headerText)}`);
      const length = parseInt(headerText, 10);
      if (length > MAX_FRAME) throw new ProtocolError(`frame too large (${length} bytes)`);
      if (this.buf.length < nl + 1 + length) return out;
      const payload = this.buf.subarray(nl + 1, nl + 1 + length);
      this.buf = this.buf.slice(nl + 1 + length);
      try {
        out.push(JSON.parse(textDecoder.decode(payload)));
      } catch {
        out.push(new ProtocolError("malformed JSON payload"));
      }
    }
  }
}

/** Validate a telemetry frame's shape; throws ProtocolError on any
 * missing or mis-sized field so the render loop can skip bad frames. */
export function parseTelemetry(msg: Record<string, unknown>): TelemetryFrame {
  if (msg.v !== PROTOCOL_VERSION || msg.type !== "telemetry") {
    throw new ProtocolError("not a telemetry frame");
  }
  const vec = (name: string, n: number): number[] => {
    const v = msg[name];
    if (!Array.isArray(v) || v.length !== n || !v.every((x) => typeof x === "number" && isFinite(x))) {
      throw new ProtocolError(`telemetry field ${name} must be ${n} finite numbers`);
    }
    return v as number[];
  };
  const curve = msg.obs_curve;
  if (!Array.isArray(curve) || curve.length < 2 ||
      !curve.every((p) => Array.isArray(p) && p.length === 2 &&
        typeof p[0] === "number" && typeof p[1] === "number")) {
    throw new ProtocolError("telemetry obs_curve must be [psi, cost] pairs");
  }
  if (typeof msg.seq !== "number" || typeof msg.stamp !== "number" ||
      typeof msg.timing_ms !== "number" || typeof msg.depth_b64 !== "string") {
    throw new ProtocolError("telemetry scalar fields missing");
  }
  return {
    v: PROTOCOL_VERSION,
    type: "telemetry",
    seq: msg.seq,
    stamp: msg.stamp,
    gt: vec("gt", 7),
    est: vec("est", 7),
    weights: vec("weights", 5),
    obs_curve: curve as number[][],
    depth_b64: msg.depth_b64,
    sfc: vec("sfc", 6),
    cmd_echo: vec("cmd_echo", 4),
    timing_ms: msg.timing_ms,
  };
}

export interface DepthRecord {
  height: number;
  width: number;
  /** row-major ranges in meters; invalid bins are zeroed */
  depth: Float32Array;
  valid: Uint8Array;
}

/** Decode the binary panorama record: u32 height, u32 width, then
 * height*width float32 depths and height*width u8 valid flags, all LE. */
export function decodeDepthRecord(b64: string): DepthRecord {
  const raw = base64ToBytes(b64);
  if (raw.length < 8) throw new ProtocolError("depth record truncated");
  const view = new DataView(raw.buffer, raw.byteOffset, raw.byteLength);
  const height = view.getUint32(0, true);
  const width = view.getUint32(4, true);
  const n = height * width;
  if (raw.length !== 8 + 5 * n) {
    throw new ProtocolError(`depth record size mismatch: ${raw.length} bytes for ${height}x${width}`);
  }
  const depth = new Float32Array(n);
  for (let i = 0; i < n; i++) depth[i] = view.getFloat32(8 + 4 * i, true);
  return { height, width, depth, valid: raw.slice(8 + 4 * n) };
}

function base64ToBytes(b64: string): Uint8Array {
  if (typeof Buffer !== "undefined") return Buffer.from(b64, "base64");
  const bin = atob(b64);
  const out = new Uint8Array(bin.length);
  for (let i = 0; i < bin.length; i++) out[i] = bin.charCodeAt(i);
  return out;
}
