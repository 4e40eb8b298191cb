"""
An independent Fock-space check
===============================

Rebuild the same states as density matrices, transform them back to phase
space through the characteristic function, and compare.
"""

import numpy as np

from stochoptics import fock
from stochoptics import gaussian as g

axis = np.linspace(-2, 2, 9)
grid = axis[:, None] + 1j * axis[None, :]

pairs = [
    ("coherent 0.5", fock.coherent_state(0.5, 20).density(), g.coherent(0.5)),
    ("squeezed 0.3", fock.squeezed_state(0, 0.3, 40).density(), g.squeezed(0, 0.3)),
    ("chaotic 0.5", fock.density_from_p(g.ChaoticP(0.5), 30), g.chaotic(0.5)),
]
for name, rho, state in pairs:
    dev = np.abs(fock.wigner_from_density(rho, grid) - g.gaussian_eval(state, grid)).max()
    sym, purity = fock.operator_moments(rho)
    print(f"{name:13s} max dev={dev:.1e} <sym n>={sym:.6f} purity={purity:.6f}")

# Not everything is gaussian: one photon dips below zero at the origin.
one = fock.fock_state(1, 8).density()
print("W_1(0) =", fock.wigner_from_density(one, 0j), "vs -2/pi =", -2 / np.pi)

# Mixing it with vacuum restores positivity.
mix = fock.density_from_mixture([(fock.fock_state(1, 8), 0.5), (fock.fock_state(0, 8), 0.5)])
print("mixture minimum on grid:", fock.wigner_from_density(mix, grid).min())
