"""Generate a synthetic scene, fly a virtual LiDAR through it, and build the
panoramic depth map that every other component consumes.

Run:  python3 demos/01_render_a_scene.py
"""
import numpy as np

from activeyaw.panorama import ScanBlock, build_depth_map, flatten
from activeyaw.simkit import gen_synthetic_scene
from activeyaw.worldmap import BodyPose, PointMap, SensorModel, raycast

# A corridor with alcoves: mostly self-similar walls, with a few pockets of
# structure that will matter a lot later.
points, stamps, path = gen_synthetic_scene("corridor_with_alcoves",
                                           {"density": 100})
print(f"scene: {points.shape[0]} surface points, "
      f"expert path {len(path)} waypoints over {stamps[-1]:.0f} s")

pmap = PointMap(points, voxel_size=0.3)
planar = sum(1 for r in pmap.occupancy.values() if r.normal is not None)
print(f"voxel map: {len(pmap.occupancy)} occupied voxels at 0.3 m, "
      f"{planar} with a plane fit")

# Stand in the middle of the corridor looking down its axis.
pose = BodyPose(position=np.array([5.0, 1.5, 1.5]), yaw=0.0)
sensor = SensorModel()
scan = raycast(pmap, pose, sensor)
print(f"scan from {pose.position}: {scan.points.shape[0]} returns "
      f"(FoV {np.degrees(sensor.azimuth_fov):.0f} deg, "
      f"{sensor.rays_az}x{sensor.rays_el} rays)")

# The panoramic depth map is an equirectangular range image around the body;
# raycast hits are already in the body frame, so they drop straight in.
pano = build_depth_map(ScanBlock(scan.points), 80, 160)
v = pano.depth[pano.valid]
print(f"panorama 80x160: {pano.valid.mean() * 100:.0f}% of bins valid, "
      f"depth range {v.min():.1f}..{v.max():.1f} m")

# The policy observation is a coarser 40x80 panorama flattened to [0,1];
# unknown directions read as max range (open until proven otherwise).
obs = flatten(build_depth_map(ScanBlock(scan.points), 40, 80),
              sensor.max_range)
print(f"flattened observation: {obs.shape[0]} values in "
      f"[{obs.min():.2f}, {obs.max():.2f}]")
