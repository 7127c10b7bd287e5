"""
Entanglement and mixedness of a few two-qubit states
=====================================================

Concurrence, entanglement of formation, linear entropy and the Horodecki
parameter ``m`` for textbook states and for members of the class E0.
"""

import numpy as np

import bellmix as bm
from bellmix.states import bell_phi_plus, maximally_mixed, pure_state

# A Bell state, the maximally mixed state and a product state
states = {
    "Bell |Phi+>": bell_phi_plus(),
    "I/4": maximally_mixed(),
    "|00>": pure_state([1, 0, 0, 0]),
}

# A Werner-like mixture of |Phi+> with white noise; it violates CHSH only
# above visibility 1/sqrt(2), while it is entangled above 1/3
for v in (0.3, 0.5, 0.72):
    rho = v * bell_phi_plus().matrix + (1 - v) * np.eye(4) / 4
    states[f"Werner v={v}"] = bm.validate_density(rho)

# E0 states are parametrized by the populations a, b and the concurrence c
states["E0 (1/2, 1/2, 1/2)"] = bm.e0_from_params(bm.E0Params(0.5, 0.5, 0.5))
states["MEMS c=1/2"] = bm.e0_from_params(bm.mems_state(0.5))

print(f"{'state':<22}{'C':>8}{'EoF':>8}{'S_L':>8}{'m':>8}  violates")
for name, rho in states.items():
    rep = bm.measure_report(rho)
    ch = bm.chsh_report(rho)
    print(
        f"{name:<22}{rep.concurrence:8.4f}{rep.eof:8.4f}{rep.linear_entropy:8.4f}"
        f"{ch.m:8.4f}  {ch.violates}"
    )

# The general Wootters route agrees with the E0 closed form C = 2|rho_23|
p = bm.E0Params(0.3, 0.4, 0.6, theta=1.2)
print("\ngeneral concurrence", bm.concurrence(bm.e0_from_params(p)), "closed form", p.c)
