"""
Same entanglement, same mixedness, different CHSH verdict
=========================================================

Inside Lambda2 two E0 states can share concurrence and linear entropy while
only one of them violates the CHSH inequality. We build such pairs and
confirm the verdict with a direct numerical search over measurement
settings, independent of the closed form ``2 sqrt(m)``.
"""

import math

import bellmix as bm

for s, c in [(0.5, 0.5), (1 / 6, 0.5), (0.3, 0.2), (0.4, 0.65)]:
    p = bm.RegionPoint(s, c)
    vbi, non_vbi = bm.witness_pair(p)
    print(f"(s, c) = ({s:.4f}, {c:.4f})")
    for label, params in (("violating", vbi), ("non-violating", non_vbi)):
        rho = bm.e0_from_params(params)
        best, _ = bm.optimize_chsh(rho, restarts=20, seed=0)
        print(
            f"  {label:<14} a={params.a:.4f} b={params.b:.4f}  C={bm.concurrence(rho):.6f}"
            f"  S_L={bm.linear_entropy(rho):.6f}  max CHSH={best:.6f}"
            f"  (2 sqrt(m) = {2 * math.sqrt(bm.horodecki_m(rho)):.6f})"
        )

# Outside Lambda2 no such pair exists
try:
    bm.witness_pair(bm.RegionPoint(1 / 8, 1 / 2))
except bm.errors.NotLambda2 as exc:
    print("\n(1/8, 1/2):", exc)
