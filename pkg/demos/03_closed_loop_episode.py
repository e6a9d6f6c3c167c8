"""The core experiment at demo scale: fly the degenerate corridor with three
yaw policies and watch what each does to state estimation.

The corridor walls carry no information along the direction of travel, so a
forward-staring sensor lets the estimator drift; yaw policies that put
structure in view keep it anchored.

Run:  python3 demos/03_closed_loop_episode.py     (several minutes; uses the
full-resolution sensor, since the degeneracy lives in fine geometry)
"""
import os
import tempfile

import numpy as np

from activeyaw.estimator import ape
from activeyaw.simkit import (
    ControllerSpec,
    EpisodeConfig,
    Scenario,
    run_episode,
    write_scene,
)

d = tempfile.mkdtemp()
write_scene("corridor_with_alcoves", os.path.join(d, "map.apc"),
            os.path.join(d, "path.txt"), {"density": 100})
scen = Scenario("corridor", os.path.join(d, "map.apc"),
                os.path.join(d, "path.txt"))

controllers = [
    ControllerSpec("fixed_rate", omega=1.0),     # slow constant spin
    ControllerSpec("static_mpc", lambda_obs=0.0),    # stare straight ahead
    ControllerSpec("static_mpc", lambda_obs=500.0),  # chase information
]

print(f"{'controller':>18} {'APE rmse':>9} {'APE max':>8} {'drift':>7}")
for spec in controllers:
    vals = []
    for seed in (1, 2, 3):
        log = run_episode(scen, spec, EpisodeConfig(duration=12.0, seed=seed,
                                                    log_curves=False))
        m = ape(log.stamps(), log.est_positions(), log.stamps(),
                log.gt_positions())
        vals.append((m.ape_rmse, m.ape_max, m.drift_rate))
    rmse, amax, drift = np.median(np.asarray(vals), axis=0)
    print(f"{spec.label():>18} {rmse:8.2f}m {amax:7.2f}m {drift:6.1f}%")

print("\nmedian of 3 seeds; the observability-weighted controller should come "
      "out ahead of both baselines (the margin widens with episode length "
      "as uncorrected drift keeps accumulating)")
