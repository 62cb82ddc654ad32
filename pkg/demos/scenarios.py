# How the entangled region changes shape when the third level of the qutrit
# example is raised (first level held at 1.7). Somewhere along the way the
# separable gap closes and the abnormal pattern becomes a normal one.
import numpy as np

from thermoent import HamiltonianSpec, find_segments, load_example, normalize_spec

base = load_example("fig3")
for h3 in np.linspace(0.75, 1.75, 11):
    h = base.eigenvalues.copy()
    h[0], h[2] = 1.7, h3
    spec = normalize_spec(HamiltonianSpec(base.shape, h, base.eigenvectors, f"h3={h3:.2f}"))
    r = find_segments(spec, grid_points=2048)
    ent = " ".join(f"({s.start:.3f},{s.end:.3f})" for s in r.segments if s.kind == "entangled")
    print(f"h3 = {h3:4.2f}  {r.scenario:<26} entangled on {ent or '-'}")
