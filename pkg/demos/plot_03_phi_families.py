"""
States with fixed concurrence and linear entropy
================================================

For fixed ``(s, c)`` the E0 states lie on an ellipse, parametrized by an
angle ``phi``. Only the angles in ``I+`` give positive matrices. Along the
ellipse the Horodecki parameter ``m(phi)`` tells whether the state violates
CHSH.

We take ``c = 1/2`` and one point from each region.
"""

from pathlib import Path

import bellmix as bm

points = {
    "Lambda1": bm.RegionPoint(1 / 8, 1 / 2),
    "Lambda2": bm.RegionPoint(1 / 2, 1 / 2),
    "Lambda3": bm.RegionPoint(7 / 10, 1 / 2),
}

curves = {}
for name, p in points.items():
    fam = bm.phi_family(p)
    print(name, "region:", bm.classify(p).value)
    print("  I+          :", " U ".join(str(iv) for iv in fam.i_plus))
    print("  violating   :", " U ".join(str(iv) for iv in fam.violating) or "-")
    print("  non-violating:", " U ".join(str(iv) for iv in fam.non_violating) or "-")
    phis = bm.regions.sample_intervals(fam.i_plus, 400)
    curves[name] = (phis, bm.regions.m_on_family(p, phis))
    print(f"  m ranges over [{curves[name][1].min():.4f}, {curves[name][1].max():.4f}]")

# In Lambda2 the crossing m = 1 happens at phi3
phi3 = bm.phi_angles(points["Lambda2"])[2]
print("\ncrossing angle phi3 =", phi3)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.5))
    for ax, (name, (phis, m)) in zip(axes, curves.items()):
        ax.plot(phis, m, ".", ms=2)
        ax.axhline(1.0, color="k", lw=0.8)
        ax.set_title(name)
        ax.set_xlabel("phi")
    axes[0].set_ylabel("m(phi)")
    out = Path(__file__).with_name("output")
    out.mkdir(exist_ok=True)
    fig.tight_layout()
    fig.savefig(out / "phi_families.png", dpi=120)
    print("wrote", out / "phi_families.png")
