"""
Gaussian states in phase space
==============================

Build the single-mode family, look at their widths and check the
convolution of a chaotic P function with the vacuum.
"""

import numpy as np

from stochoptics import gaussian as g

# Every single-mode state here is exp(-A(Re d)^2 - B(Im d)^2) around a centre.
states = {
    "vacuum": g.vacuum(),
    "coherent 0.5+0.2j": g.coherent(0.5 + 0.2j),
    "squeezed s=0.4": g.squeezed(0, 0.4),
    "chaotic n=1": g.chaotic(1.0),
}
for name, state in states.items():
    vr, vi = state.variances
    print(f"{name:20s} A={state.A:.4f} B={state.B:.4f} var=({vr:.4f}, {vi:.4f}) {state.kind.value}")

# Pure states saturate the vacuum area: var_re * var_im = 1/16.
sq = states["squeezed s=0.4"]
print("squeezed area:", np.prod(sq.variances), "vacuum area:", 1 / 16)

# A chaotic P function smeared by the vacuum gives the chaotic Wigner function.
n = 0.7
smeared = g.convolve_vacuum(g.ChaoticP(n))
print("convolved variance", smeared.variances[0], "expected", (2 * n + 1) / 4)

# Evaluate on a small grid.
axis = np.linspace(-1.5, 1.5, 5)
grid = axis[:, None] + 1j * axis[None, :]
print(np.round(g.gaussian_eval(smeared, grid), 4))
