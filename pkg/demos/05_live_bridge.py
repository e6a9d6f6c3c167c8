"""Fly an episode over the TCP bridge: a scripted "pilot" connects as a
client, streams velocity commands at 20 Hz, and reads telemetry frames back,
exactly the loop the cockpit frontend runs.

Run:  python3 demos/05_live_bridge.py     (about 10 seconds)
"""
import base64
import json
import os
import socket
import tempfile
import threading
import time

from activeyaw.bridge import BridgeServer, FrameDecoder, encode_message, serve_episode
from activeyaw.simkit import (
    ControllerSpec,
    EpisodeConfig,
    EpisodeRunner,
    Scenario,
    fast_profile,
    write_scene,
)

d = tempfile.mkdtemp()
write_scene("box_room", os.path.join(d, "map.apc"), os.path.join(d, "path.txt"))
scen = Scenario("box_room", os.path.join(d, "map.apc"),
                os.path.join(d, "path.txt"))

runner = EpisodeRunner(scen, ControllerSpec("static_mpc", lambda_obs=500.0),
                       EpisodeConfig(duration=8.0, estimator="oracle"),
                       fast_profile())
server = BridgeServer(port=0)
print(f"bridge listening on 127.0.0.1:{server.port}")

loop = threading.Thread(target=serve_episode, args=(runner, server),
                        kwargs={"realtime": True}, daemon=True)
loop.start()

sock = socket.create_connection(("127.0.0.1", server.port))
sock.sendall(encode_message({"v": 1, "type": "hello", "role": "pilot"}))

frames = []
def read_telemetry():
    dec = FrameDecoder()
    while True:
        data = sock.recv(65536)
        if not data:
            return
        for msg in dec.feed(data):
            if isinstance(msg, dict) and msg.get("type") == "telemetry":
                frames.append(msg)

threading.Thread(target=read_telemetry, daemon=True).start()

# Fly forward-right for 3 s, then go silent and let the dead-man brake us.
t0 = time.monotonic()
while time.monotonic() - t0 < 3.0:
    sock.sendall(encode_message({"v": 1, "type": "cmd", "vx": 1.0, "vy": 0.3,
                                 "vz": 0.0, "yaw_rate": 0.0,
                                 "stamp": time.monotonic() - t0}))
    time.sleep(0.05)
time.sleep(2.0)

for f in frames[:: max(len(frames) // 5, 1)]:
    gt = f["gt"]
    depth = base64.b64decode(f["depth_b64"])
    print(f"seq {f['seq']:3d}  t={f['stamp']:5.2f}s  "
          f"pos ({gt[0]:5.2f},{gt[1]:5.2f},{gt[2]:5.2f})  "
          f"weights {[round(w, 2) for w in f['weights']]}  "
          f"depth blob {len(depth)} B  {f['timing_ms']:.0f} ms/step")

p_start, p_end = frames[0]["gt"][:2], frames[-1]["gt"][:2]
moved = ((p_end[0] - p_start[0]) ** 2 + (p_end[1] - p_start[1]) ** 2) ** 0.5
print(f"\n{len(frames)} telemetry frames; pilot moved the body {moved:.2f} m, "
      "then the 500 ms dead-man zeroed the command")
sock.close()
server.close()
