"""Command-line interface: ``thermoent {scan,critical,eta,paper-figures}``.

Exit codes: 0 success, 1 reference comparison failed, 2 input error,
3 compute error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .corpus import EXAMPLES, REFERENCE, load_example
from .critical import (
    DEFAULT_GRID,
    critical_temperatures,
    report_dict,
    scan,
    t_star,
)
from .errors import ComputeError, InputError
from .fileformat import dump_report, parse_hamiltonian, write_scan_csv
from .witness import DEFAULT_RESTARTS, DEFAULT_SEED, default_oracle_resolution, eta_grid_oracle, eta_seesaw

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_COMPUTE = 0, 1, 2, 3


def _add_source(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--hamiltonian", type=Path, metavar="PATH", help="Hamiltonian file")
    src.add_argument("--paper-example", choices=EXAMPLES, metavar="NAME",
                     help="bundled example: " + ", ".join(EXAMPLES))


def _load(args):
    if args.hamiltonian is not None:
        try:
            text = args.hamiltonian.read_bytes()
        except OSError as exc:
            raise InputError(f"cannot read {args.hamiltonian}: {exc.strerror}") from exc
        return parse_hamiltonian(text)
    return load_example(args.paper_example)


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_scan(args) -> int:
    spec = _load(args)
    t_max = args.tmax
    if t_max is None:
        t_max = t_star(spec) or 1.0
    if args.points < 2 or not t_max > args.tmin or args.tmin < 0:
        raise InputError("need --points >= 2 and 0 <= --tmin < --tmax")
    points = scan(spec, t_max, args.points, t_min=args.tmin)
    _emit(write_scan_csv(points), args.out)
    return EXIT_OK


def cmd_critical(args) -> int:
    spec = _load(args)
    report, eta_result = critical_temperatures(
        spec, restarts=args.restarts, seed=args.seed, grid_points=args.grid, skip_eta=args.skip_eta
    )
    d = report_dict(spec, report, eta_result, restarts=args.restarts, seed=args.seed, grid_points=args.grid)
    _emit(dump_report(d), args.out)
    return EXIT_OK


def cmd_eta(args) -> int:
    spec = _load(args)
    res = eta_seesaw(spec, args.restarts, args.seed)
    d = {
        "label": spec.label,
        "eta": res.eta,
        "psi": [[z.real, z.imag] for z in res.best.psi],
        "phi": [[z.real, z.imag] for z in res.best.phi],
        "restarts": args.restarts,
        "seed": args.seed,
        "sweeps": res.sweeps,
    }
    if args.oracle:
        resolution = args.resolution or default_oracle_resolution(spec)
        d["oracle_value"] = eta_grid_oracle(spec, resolution)
        d["oracle_resolution"] = resolution
    _emit(dump_report(d), args.out)
    return EXIT_OK


def compare_with_reference(name, d, tol):
    """Rows ``(example, quantity, computed, reference, ok)`` for one report.

    Quantities without a reference value are listed with ``ok = None``.
    """
    rows = []
    ref = REFERENCE[name]
    if "t_e" not in ref:
        rows.append((name, "t_e", d["t_e"], "-", None))
        rows += [(name, f"T_{k}", b, "-", None) for k, b in enumerate(d["boundaries"], start=1)]
        rows.append((name, "t_s", d["t_s"], "-", None))
    for key in ("t_h", "t_e", "t_s", "t_star"):
        if key in ref:
            ok = d[key] is not None and abs(d[key] - ref[key]) <= tol
            rows.append((name, key, d[key], ref[key], ok))
    if "boundaries" in ref:
        got, want = d["boundaries"], ref["boundaries"]
        if len(got) != len(want):
            rows.append((name, "boundaries", len(got), len(want), False))
        for k, (g, w) in enumerate(zip(got, want), start=1):
            rows.append((name, f"T_{k}", g, w, abs(g - w) <= tol))
    rows.append((name, "scenario", d["scenario"], ref["scenario"], d["scenario"] == ref["scenario"]))
    return rows


def cmd_paper_figures(args) -> int:
    rows = []
    for name in EXAMPLES:
        spec = load_example(name)
        report, eta_result = critical_temperatures(
            spec, restarts=args.restarts, seed=args.seed, grid_points=args.grid
        )
        rows += compare_with_reference(name, report_dict(spec, report, eta_result), args.tolerance)

    def cell(v):
        return f"{v:.6g}" if isinstance(v, float) else str(v)

    lines = [f"{'example':<16}{'quantity':<12}{'computed':>26}{'reference':>26}  status"]
    for name, q, got, want, ok in rows:
        status = "info" if ok is None else ("PASS" if ok else "FAIL")
        lines.append(f"{name:<16}{q:<12}{cell(got):>26}{cell(want):>26}  {status}")
    checked = [r for r in rows if r[-1] is not None]
    failed = sum(not r[-1] for r in checked)
    lines.append(f"{len(checked) - failed}/{len(checked)} checks within tolerance {args.tolerance:g}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thermoent", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="CSV profile T,energy,purity,lambda_min,modulus")
    _add_source(p)
    p.add_argument("--tmin", type=float, default=0.0)
    p.add_argument("--tmax", type=float, default=None, help="default: T_* of the Hamiltonian")
    p.add_argument("--points", type=int, default=1001)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("critical", help="critical temperatures and segment report (JSON)")
    _add_source(p)
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--skip-eta", action="store_true", help="do not compute eta and T_H")
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("eta", help="minimal product-state energy")
    _add_source(p)
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force grid")
    p.add_argument("--resolution", type=int, default=None)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("paper-figures", help="compare all bundled examples with reference values")
    p.add_argument("--tolerance", type=float, default=0.01)
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_paper_figures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"thermoent: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ComputeError, ArithmeticError) as exc:
        print(f"thermoent: compute error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
