"""Train the adaptive weight policy for a few thousand steps: enough to see
the machinery work end to end, not enough to beat the static baselines
(that takes ~2e5 steps; see README).

Run:  python3 demos/04_train_policy.py     (a few minutes)
"""
import json
import os
import tempfile

from activeyaw.policy import PpoConfig, RewardConfig
from activeyaw.simkit import Scenario, fast_profile, train, write_scene

d = tempfile.mkdtemp()
scenarios = []
for kind in ("corridor_with_alcoves", "box_room"):
    mp, tp = os.path.join(d, kind + ".apc"), os.path.join(d, kind + ".txt")
    write_scene(kind, mp, tp, {"density": 100})
    scenarios.append(Scenario(kind, mp, tp))

out = os.path.join(d, "train")
result = train(
    scenarios,
    PpoConfig(total_steps=4096, rollout=512, batch=256, epochs=4),
    RewardConfig(),
    out,
    seed=0,
    profile=fast_profile(),
    progress=lambda line: print(
        f"step {line['step']:6d}  reward {line['mean_reward_raw']:.3f}  "
        f"kl {line['kl']:.4f}  lr {line['lr']:.2e}  epochs {line['epochs']}"),
)

print(f"\ncheckpoint: {result['checkpoint']}")
with open(result["metrics"]) as f:
    lines = [json.loads(l) for l in f]
print(f"{len(lines)} updates logged; reward components last update: "
      f"acc {lines[-1]['r_acc']:.3f} exp {lines[-1]['r_exp']:.3f} "
      f"smooth {lines[-1]['r_smooth']:.3f}")
print("resume by calling train() with the same out_dir, or evaluate with:\n"
      f"  activeyaw run --scene <dir> --controller adaptive "
      f"--checkpoint {result['checkpoint']}")
