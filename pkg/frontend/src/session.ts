/** Connection lifecycle: handshake, frame dispatch, auto-reconnect with
 * exponential backoff. The transport is injected so the same session runs
 * over a browser WebSocket shim or a raw node socket in tests. */

import {
  FrameDecoder,
  ProtocolError,
  TelemetryFrame,
  encodeMessage,
  makeHello,
  parseTelemetry,
} from "./protocol.js";

export interface Connection {
  send(data: Uint8Array): void;
  close(): void;
}

export interface TransportEvents {
  onData(chunk: Uint8Array): void;
  onClose(): void;
  onError(err: Error): void;
}

/** Opens one connection; resolves once writable, rejects on failure. */
export type Transport = (events: TransportEvents) => Promise<Connection>;

export type SessionStatus = "connecting" | "connected" | "reconnecting" | "closed";

export interface SessionOptions {
  role: "pilot" | "observer";
  transport: Transport;
  onFrame: (frame: TelemetryFrame) => void;
  onStatus?: (status: SessionStatus, detail?: string) => void;
  onServerError?: (message: string) => void;
  /** reconnect delays; injectable for tests */
  backoffMs?: number[];
  schedule?: (fn: () => void, ms: number) => void;
}

const DEFAULT_BACKOFF = [500, 1000, 2000, 4000, 8000];

export class Session {
  status: SessionStatus = "closed";
  lastFrame: TelemetryFrame | null = null;
  skippedFrames = 0;

  private conn: Connection | null = null;
  private decoder = new FrameDecoder();
  private attempt = 0;
  private closedByUser = false;
  private readonly backoff: number[];
  private readonly schedule: (fn: () => void, ms: number) => void;

  constructor(private readonly opts: SessionOptions) {
    this.backoff = opts.backoffMs ?? DEFAULT_BACKOFF;
    this.schedule = opts.schedule ?? ((fn, ms) => setTimeout(fn, ms));
  }

  async connect(): Promise<void> {
    this.closedByUser = false;
    this.setStatus(this.attempt === 0 ? "connecting" : "reconnecting");
    try {
      this.decoder = new FrameDecoder();
      this.conn = await this.opts.transport({
        onData: (chunk) => this.handleData(chunk),
        onClose: () => this.handleDrop("connection closed"),
        onError: (err) => this.handleDrop(err.message),
      });
    } catch (err) {
      this.handleDrop(err instanceof Error ? err.message : String(err));
      return;
    }
    this.conn.send(encodeMessage(makeHello(this.opts.role)));
    this.attempt = 0;
    this.setStatus("connected");
  }

  /** Raw message out (pilot commands); dropped silently when offline, the
   * server's dead-man covers the gap. */
  send(obj: object): void {
    if (this.status === "connected" && this.conn) {
      this.conn.send(encodeMessage(obj));
    }
  }

  close(): void {
    this.closedByUser = true;
    this.conn?.close();
    this.conn = null;
    this.setStatus("closed");
  }

  private handleData(chunk: Uint8Array): void {
    let messages;
    try {
      messages = this.decoder.feed(chunk);
    } catch (err) {
      // framing is lost; force a clean reconnect
      this.conn?.close();
      this.handleDrop(err instanceof Error ? err.message : String(err));
      return;
    }
    for (const msg of messages) {
      if (msg instanceof ProtocolError) {
        this.skippedFrames += 1;
        continue;
      }
      if (msg.type === "error") {
        this.opts.onServerError?.(String(msg.error ?? "unknown server error"));
        continue;
      }
      if (msg.type === "telemetry") {
        try {
          const frame = parseTelemetry(msg as Record<string, unknown>);
          this.lastFrame = frame;
          this.opts.onFrame(frame);
        } catch {
          this.skippedFrames += 1;
        }
      }
    }
  }

  private handleDrop(detail: string): void {
    this.conn = null;
    if (this.closedByUser) return;
    const delay = this.backoff[Math.min(this.attempt, this.backoff.length - 1)]!;
    this.attempt += 1;
    this.setStatus("reconnecting", detail);
    this.schedule(() => {
      if (!this.closedByUser) void this.connect();
    }, delay);
  }

  private setStatus(status: SessionStatus, detail?: string): void {
    this.status = status;
    this.opts.onStatus?.(status, detail);
  }
}
