"""Where should the sensor look? Sweep candidate yaws over the panorama and
score each by the A-optimality of the Fisher information a virtual scan in
that direction would contribute.

Run:  python3 demos/02_observability_sweep.py
"""
import numpy as np

from activeyaw.geometry import rot_z
from activeyaw.observability import fit_quadratic, sweep
from activeyaw.panorama import ScanBlock, build_depth_map
from activeyaw.simkit import gen_synthetic_scene
from activeyaw.worldmap import BodyPose, PointMap, SensorModel, raycast

points, _, _ = gen_synthetic_scene("corridor_with_alcoves", {"density": 100})
pmap = PointMap(points, voxel_size=0.3)
sensor = SensorModel()

# Build a panorama from a handful of poses near an alcove so side structure
# is actually in view.
center = np.array([5.75, 1.5, 1.5])
blocks = []
for yaw in np.linspace(-np.pi, np.pi, 8, endpoint=False):
    sc = raycast(pmap, BodyPose(position=center, yaw=float(yaw)), sensor)
    # hits come back in the body frame; rotate into the yaw-stabilized frame
    blocks.append(sc.points @ rot_z(float(yaw)).T)
pano = build_depth_map(ScanBlock(np.concatenate(blocks)), 80, 160)

curve = sweep(pano, 36, sensor)
best = curve.argmin_yaw()
print("yaw ->  J_obs (lower = more informative)")
for y, c in zip(curve.yaws, curve.costs):
    bar = "#" * int(np.clip(c / curve.costs.max() * 40, 1, 40))
    mark = "  <-- best" if y == best else ""
    print(f"{y:6.2f}  {c:10.1f} {bar}{mark}")

# The controller does not consume the raw curve; it follows a local quadratic
# surrogate around the current yaw.
fit = fit_quadratic(curve, psi0=0.0)
print(f"\nquadratic surrogate at yaw 0: g={fit.g_obs:.1f} h={fit.h_obs:.1f} "
      f"-> pull toward {best:+.2f} rad "
      f"({'alcove side' if abs(best) > 0.5 else 'straight ahead'})")
