"""
Detection with the vacuum subtracted
====================================

Detectors count |alpha|^2 - 1/2 per mode, so the vacuum registers nothing on
average even though single realizations can go negative.
"""

import numpy as np

from stochoptics import detection as d
from stochoptics import gaussian as g
from stochoptics.sampling import sample_single_mode

for state, label in [(g.vacuum(), "vacuum"), (g.coherent(0.6), "coherent 0.6"),
                     (g.chaotic(1.5), "chaotic 1.5")]:
    batch = sample_single_mode(state, 200_000, seed=1)
    est = d.mc_rate(batch, 0)
    print(f"{label:14s} closed={d.mean_rate(state):.4f} mc={est.mean:.4f} +- {est.std_error:.4f}")

vac = sample_single_mode(g.vacuum(), 100_000, seed=2)
print("fraction of negative vacuum counts:", np.mean(np.abs(vac.draws[:, 0]) ** 2 < 0.5))

# A point detector sees the field of all listed modes; uncovered modes stay vacuum.
modes = [d.ModeSpec((0, 0, 1), (1, 0, 0)), d.ModeSpec((0, 0, 2), (0, 1, 0))]
r = (0.0, 0.0, 0.3)
est = d.point_detector_rate([g.coherent(0.5)], modes, r, t=0.0, count=200_000, seed=3)
print("I - I0:", est.mean, "+-", est.std_error, "closed:", d.point_detector_mean([g.coherent(0.5)], modes, r, 0.0))
