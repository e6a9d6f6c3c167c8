/** Transports. The bridge speaks raw TCP; in node (tests, headless tools)
 * we dial it directly, in the browser we expect a TCP-to-WebSocket proxy
 * carrying the same byte stream. */

import { Connection, Transport, TransportEvents } from "./session.js";

export function tcpTransport(host: string, port: number): Transport {
  return async (events: TransportEvents): Promise<Connection> => {
    const net = await import("node:net");
    return new Promise((resolve, reject) => {
      const sock = net.createConnection({ host, port });
      sock.once("connect", () => {
        sock.on("data", (chunk: Buffer) => events.onData(chunk));
        sock.on("close", () => events.onClose());
        sock.on("error", (err: Error) => events.onError(err));
        resolve({
          send: (data) => sock.write(data),
          close: () => sock.destroy(),
        });
      });
      sock.once("error", reject);
    });
  };
}

export function websocketTransport(url: string): Transport {
  return (events: TransportEvents): Promise<Connection> =>
    new Promise((resolve, reject) => {
      const ws = new WebSocket(url);
      ws.binaryType = "arraybuffer";
      ws.onopen = () => {
        ws.onmessage = (ev) => events.onData(new Uint8Array(ev.data as ArrayBuffer));
        ws.onclose = () => events.onClose();
        ws.onerror = () => events.onError(new Error("websocket error"));
        resolve({
          send: (data) => ws.send(data),
          close: () => ws.close(),
        });
      };
      ws.onerror = () => reject(new Error(`cannot reach ${url}`));
    });
}
