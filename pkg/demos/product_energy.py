# Lowest energy reachable by a product state, found two ways:
# alternating minimization from random starts, and a brute-force angle grid.
import time

import numpy as np

from thermoent import energy, eta_grid_oracle, eta_seesaw, load_example, t_h
from thermoent.witness import seesaw_descent

spec = load_example("fig2-dashed")

res = eta_seesaw(spec, restarts=64, seed=0)
print(f"see-saw  eta = {res.eta:.12f}  ({res.sweeps} sweeps)")

t0 = time.perf_counter()
grid = eta_grid_oracle(spec)
print(f"grid     eta = {grid:.12f}  ({time.perf_counter() - t0:.2f} s)")

# every state colder than T_H has energy below eta, so no product mixture fits
T_H = t_h(spec, res.eta)
print(f"T_H = {T_H:.6f}, U(T_H) = {energy(spec, T_H):.12f}")

# a single descent, sweep by sweep
rng = np.random.default_rng(1)
_, history = seesaw_descent(spec, rng.normal(size=2) + 0j, rng.normal(size=2) + 0j)
for k, e in enumerate(history[:8]):
    print(f"  sweep {k}: {e:.10f}")
