"""
The admissible (linear entropy, concurrence) plane
==================================================

Every E0 state maps to a point ``(S_L, C)``. The admissible set is bounded
by ``S_max(c)`` and splits into three regions: in Lambda1 every state
violates the CHSH inequality, in Lambda3 none does, and in Lambda2 both
kinds share the same ``(S_L, C)``.

A cloud of random E0 states is drawn on top of the boundary curves,
coloured by the CHSH verdict of each state.
"""

from pathlib import Path

import numpy as np

import bellmix as bm
from bellmix.regions import C_CRIT
from bellmix.states import random_e0_params

rng = np.random.default_rng(1)
cs = np.linspace(1e-3, 1.0, 400)
smax = np.array([bm.s_max(c) for c in cs])
low = cs[cs <= C_CRIT]
S1 = np.array([bm.s1(c) for c in low])
S2 = np.array([bm.s2(c) for c in low])

samples = [random_e0_params(rng) for _ in range(4000)]
points = np.array([(bm.linear_entropy_e0(p), p.c) for p in samples])
verdicts = np.array([bm.horodecki_m_e0(p) > 1 for p in samples])

# Count how the random states fall into the three regions
regions = [bm.classify(pt) for pt in points if pt[1] > 0]
for tag in bm.Region:
    print(f"{tag.value:<14}{sum(r is tag for r in regions):6d}")

# No violating state lies in Lambda3 and no non-violating state in Lambda1
bad = [
    (pt, v)
    for pt, v in zip(points, verdicts)
    if pt[1] > 0 and (bm.classify(pt), v) in {(bm.Region.LAMBDA3, True), (bm.Region.LAMBDA1, False)}
]
print("states contradicting their region:", len(bad))
assert not bad

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 5))
    ax.scatter(points[~verdicts, 0], points[~verdicts, 1], s=2, c="tab:blue", label="m <= 1")
    ax.scatter(points[verdicts, 0], points[verdicts, 1], s=2, c="tab:red", label="m > 1")
    ax.plot(smax, cs, "k", label="S_max")
    ax.plot(S1, low, "k--", label="S_1")
    ax.plot(S2, low, "k:", label="S_2")
    ax.set_xlabel("linear entropy")
    ax.set_ylabel("concurrence")
    ax.legend(loc="upper right")
    out = Path(__file__).with_name("output")
    out.mkdir(exist_ok=True)
    fig.savefig(out / "region_map.png", dpi=120)
    print("wrote", out / "region_map.png")
