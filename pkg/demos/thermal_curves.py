# Energy, purity and separability modulus of the thermal family for one
# bundled Hamiltonian. Saves thermal_curves.png when matplotlib is around.
import sys

import numpy as np

from thermoent import load_example, scan, t_star

name = sys.argv[1] if len(sys.argv) > 1 else "fig3"
spec = load_example(name)
ts = t_star(spec)
points = scan(spec, 1.2 * ts, 600)

T = np.array([p.T for p in points])
ell = np.array([p.modulus for p in points])
print(f"{name}: T_* = {ts:.6f}")
print(f"  modulus < 1 (entangled) on {np.mean(ell < 1):.1%} of the grid")
print(f"  smallest modulus {ell.min():.4f} at T = {T[np.argmin(ell)]:.4f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)

fig, ax = plt.subplots(3, 1, sharex=True, figsize=(6, 7))
ax[0].plot(T, [p.energy for p in points])
ax[0].set_ylabel("U(T)")
ax[1].plot(T, [p.purity for p in points])
ax[1].axhline(1 / 3 if spec.D == 4 else 1 / 5, ls="--", c="gray")
ax[1].set_ylabel("purity")
ax[2].plot(T, ell)
ax[2].set_ylabel("modulus")
ax[2].set_xlabel("T")
fig.tight_layout()
fig.savefig("thermal_curves.png", dpi=120)
print("wrote thermal_curves.png")
