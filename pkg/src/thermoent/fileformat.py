"""Text formats: Hamiltonian input files, CSV scan profiles, JSON reports.

Hamiltonian files are line oriented. ``#`` starts a comment; every other
non-blank line is ``key: values``::

    label: two coupled qubits
    dims: 2 2
    eigenvalues: 0 1.5 7 8
    eigenvector: 1 0 0 0
    eigenvector: 0 0.5 [0.8660254037844386, 0] 0
    ...

Entries are real numbers or ``[re, im]`` pairs. There must be one
``eigenvector`` line per eigenvalue, in the same order.
"""

from __future__ import annotations

import csv
import io
import json
import re

import numpy as np

from .errors import DimensionMismatch, HamiltonianSyntaxError
from .hamiltonian import HamiltonianSpec, normalize_spec
from .linalg import BipartiteShape

_TOKEN = re.compile(r"\[[^\]]*\]|[^\s\[\]]+")
_KEYS = ("label", "dims", "eigenvalues", "eigenvector")
CSV_HEADER = ("T", "energy", "purity", "lambda_min", "modulus")


def _number(token: str, lineno: int) -> complex:
    try:
        if token.startswith("["):
            parts = [p for p in re.split(r"[,\s]+", token[1:-1].strip()) if p]
            if len(parts) != 2:
                raise ValueError
            return complex(float(parts[0]), float(parts[1]))
        return complex(float(token), 0.0)
    except ValueError:
        raise HamiltonianSyntaxError(f"cannot parse number {token!r}", lineno) from None


def _tokens(text: str, lineno: int) -> list[str]:
    toks = _TOKEN.findall(text)
    stray = _TOKEN.sub("", text).strip()
    if stray:
        raise HamiltonianSyntaxError(f"unexpected characters {stray!r}", lineno)
    return toks


def parse_hamiltonian(text) -> HamiltonianSpec:
    """Parse, validate and normalize a Hamiltonian description."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    label, dims, evals, evecs = "", None, None, []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in _KEYS:
            raise HamiltonianSyntaxError(f"expected one of {', '.join(_KEYS)} followed by ':'", lineno)
        if key == "label":
            label = rest.strip()
        elif key == "dims":
            toks = rest.split()
            if len(toks) != 2 or not all(t.isdigit() for t in toks):
                raise HamiltonianSyntaxError("dims needs two positive integers", lineno)
            if dims is not None:
                raise HamiltonianSyntaxError("dims given twice", lineno)
            dims = (int(toks[0]), int(toks[1]), lineno)
        elif key == "eigenvalues":
            vals = [_number(t, lineno) for t in _tokens(rest, lineno)]
            if any(v.imag != 0 for v in vals):
                raise HamiltonianSyntaxError("eigenvalues must be real", lineno)
            if evals is not None:
                raise HamiltonianSyntaxError("eigenvalues given twice", lineno)
            evals = ([v.real for v in vals], lineno)
        else:
            evecs.append(([_number(t, lineno) for t in _tokens(rest, lineno)], lineno))

    if dims is None:
        raise HamiltonianSyntaxError("missing 'dims'")
    if evals is None:
        raise HamiltonianSyntaxError("missing 'eigenvalues'")
    shape = BipartiteShape(dims[0], dims[1])
    D = shape.D
    if len(evals[0]) != D:
        raise DimensionMismatch(f"line {evals[1]}: {len(evals[0])} eigenvalues for D = {D}")
    if len(evecs) != D:
        raise DimensionMismatch(f"{len(evecs)} eigenvector lines for D = {D}")
    for k, (vec, lineno) in enumerate(evecs):
        if len(vec) != D:
            raise DimensionMismatch(f"line {lineno}: eigenvector {k} has {len(vec)} entries, expected {D}")
    raw = HamiltonianSpec(shape, np.array(evals[0]), np.array([v for v, _ in evecs]), label)
    return normalize_spec(raw)


def _fmt_entry(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    return f"[{z.real!r}, {z.imag!r}]"


def format_hamiltonian(spec: HamiltonianSpec) -> str:
    lines = []
    if spec.label:
        lines.append(f"label: {spec.label}")
    lines.append(f"dims: {spec.shape.d1} {spec.shape.d2}")
    lines.append("eigenvalues: " + " ".join(repr(float(h)) for h in spec.eigenvalues))
    for vec in spec.eigenvectors:
        lines.append("eigenvector: " + " ".join(_fmt_entry(z) for z in vec))
    return "\n".join(lines) + "\n"


def _sig(x: float, digits: int) -> str:
    return f"{x:.{digits}g}"


def write_scan_csv(points, stream=None) -> str:
    """CSV with one row per thermal point, numbers at 9 significant digits."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for p in points:
        w.writerow([_sig(v, 9) for v in (p.T, p.energy, p.purity, p.lambda_min, p.modulus)])
    text = buf.getvalue()
    if stream is not None:
        stream.write(text)
    return text


def read_scan_csv(text: str) -> dict[str, np.ndarray]:
    rows = list(csv.reader(io.StringIO(text)))
    if tuple(rows[0]) != CSV_HEADER:
        raise HamiltonianSyntaxError(f"unexpected CSV header {rows[0]!r}", 1)
    data = np.array(rows[1:], dtype=float).reshape(-1, len(CSV_HEADER))
    return {name: data[:, i] for i, name in enumerate(CSV_HEADER)}


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def load_report(text: str) -> dict:
    return json.loads(text)
