# Critical temperatures for every bundled Hamiltonian, side by side.
from thermoent import EXAMPLES, critical_temperatures, load_example


def fmt(x):
    return "   -    " if x is None else f"{x:8.4f}"


print(f"{'example':<16}{'T_H':>9}{'T_E':>9}{'T_S':>9}{'T_*':>9}  scenario / boundaries")
for name in EXAMPLES:
    report, _ = critical_temperatures(load_example(name))
    inner = ", ".join(f"{b:.4f}" for b in report.boundaries)
    print(
        f"{name:<16}{fmt(report.t_h)} {fmt(report.t_e)} {fmt(report.t_s)} {fmt(report.t_star)}"
        f"  {report.scenario} [{inner}]"
    )

# fig3 shows the interesting case: entangled, then separable, then entangled
# again before the state separates for good.
report, _ = critical_temperatures(load_example("fig3"))
for s in report.segments:
    print(f"  [{s.start:.4f}, {s.end:.4f}]  {s.kind}")
if report.wehrl_pair:
    lo, hi = report.wehrl_pair
    print(f"separable at T = {lo:.4f} but entangled at the hotter T = {hi:.4f}")
