"""
Classical or entangled?
=======================

A two-mode gaussian with photon number n and correlation x is classical
when a positive signal P function exists, i.e. |x| < 2n/(2n+1).
"""

import numpy as np

from stochoptics import gaussian as g

# The bound grows towards 1 with intensity: weak beams entangle easily.
for n in (0.0, 0.1, 0.5, 1.0, 5.0):
    print(f"n={n:<4} bound={g.classical_bound(n):.6f}")

# A coarse map of the (n, x) plane.
symbols = {"classical": ".", "classical_boundary": "|", "entangled": "E", "not_real": " "}
xs = np.linspace(-1.05, 1.05, 43)
for n in (0.05, 0.2, 0.5, 1.0, 2.0):
    row = "".join(symbols[g.classify_two_mode(n, x).value] for x in xs)
    print(f"n={n:<4} {row}")

# Classical states are exactly those reachable from a signal (a, c) plus vacuum noise.
n, x = 0.8, 0.5
a, c = g.signal_from_nx(n, x)
print("signal", (a, c), "->", g.two_mode_signal(a, c))
w = g.convolve_vacuum(g.TwoModeSignalP(a, a, c))
print("convolved state", (w.n, w.x), g.classify_two_mode(w.n, w.x).value)

# Each mode on its own always looks like chaotic light.
print(g.marginal_mode(g.two_mode_wigner(0.3, 0.9)) == g.chaotic(0.3))
