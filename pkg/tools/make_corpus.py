"""Regenerate the bundled Hamiltonian files in src/thermoent/data/.

Each eigenvector is written in double precision with its closed form in a
comment. Run from the repository root:  python3 tools/make_corpus.py
"""

from math import sqrt
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "thermoent" / "data"
S2 = sqrt(2)


def fig1_vectors():
    x = 0.5
    y = sqrt(1 - x**2)
    z = sqrt(1 - 2 * x**2)
    header = "x = 0.5, y = sqrt(1 - x^2), z = sqrt(1 - 2 x^2)"
    vecs = [
        ("(1, 0, 0, 0)", [1, 0, 0, 0]),
        ("(0, x, y, 0)", [0, x, y, 0]),
        ("(0, x, -x^2/y, z/y)", [0, x, -(x**2) / y, z / y]),
        ("(0, z, -x z/y, -x/y)", [0, z, -x * z / y, -x / y]),
    ]
    return header, vecs


def fig2_solid_vectors():
    r = 1 / S2
    return "r = 1/sqrt(2)", [
        ("(r, 0, 0, r)", [r, 0, 0, r]),
        ("(r, 0, 0, -r)", [r, 0, 0, -r]),
        ("(0, r, r, 0)", [0, r, r, 0]),
        ("(0, r, -r, 0)", [0, r, -r, 0]),
    ]


def fig2_dashed_vectors():
    r = 1 / S2
    return "r = 1/sqrt(2)", [
        ("(1, 0, 0, 0)", [1, 0, 0, 0]),
        ("(0, r, r, 0)", [0, r, r, 0]),
        ("(0, r, -r, 0)", [0, r, -r, 0]),
        ("(0, 0, 0, 1)", [0, 0, 0, 1]),
    ]


def fig3_vectors():
    x = 0.2
    y = sqrt(1 - 2 * x**2)
    r = 1 / S2
    return "x = 0.2, y = sqrt(1 - 2 x^2), r = 1/sqrt(2)", [
        ("(1, 0, 0, 0, 0, 0)", [1, 0, 0, 0, 0, 0]),
        ("(0, 0, x, 0, x, y)", [0, 0, x, 0, x, y]),
        ("(0, 0, r, 0, -r, 0)", [0, 0, r, 0, -r, 0]),
        ("(0, r, 0, r, 0, 0)", [0, r, 0, r, 0, 0]),
        ("(0, r, 0, -r, 0, 0)", [0, r, 0, -r, 0, 0]),
        ("(0, 0, y r, 0, y r, -x sqrt(2))", [0, 0, y * r, 0, y * r, -x * S2]),
    ]


def fig4_vectors():
    return "h = 1/2", [
        ("(1, 0, 0, 0, 0, 0)", [1, 0, 0, 0, 0, 0]),
        ("h (0, 1, 0, 1, 1, 1)", [0, 0.5, 0, 0.5, 0.5, 0.5]),
        ("(0, 0, 1, 0, 0, 0)", [0, 0, 1, 0, 0, 0]),
        ("h (0, 1, 0, 1, -1, -1)", [0, 0.5, 0, 0.5, -0.5, -0.5]),
        ("h (0, 1, 0, -1, 1, -1)", [0, 0.5, 0, -0.5, 0.5, -0.5]),
        ("h (0, -1, 0, 1, 1, -1)", [0, -0.5, 0, 0.5, 0.5, -0.5]),
    ]


CORPUS = {
    "fig1": ((2, 2), [0, 1.5, 7, 8], fig1_vectors),
    "fig1-variant": ((2, 2), [0, 1.5, 2, 3], fig1_vectors),
    "fig2-solid": ((2, 2), [0.75, 0, 0.75, 2], fig2_solid_vectors),
    "fig2-dashed": ((2, 2), [0.01, 2, 0, 4], fig2_dashed_vectors),
    "fig3": ((2, 3), [0.75, 0, 0.75, 2, 3, 4], fig3_vectors),
    "fig3-variant": ((2, 3), [1.7, 0, 1.75, 2, 3, 4], fig3_vectors),
    "fig3-inset-1": ((2, 3), [1, 0, 0.75, 2, 3, 4], fig3_vectors),
    "fig3-inset-1.5": ((2, 3), [1.5, 0, 0.75, 2, 3, 4], fig3_vectors),
    "fig4": ((2, 3), [0, 0.7, 7, 0.9, 1, 1.5], fig4_vectors),
}


def render(name):
    dims, evals, vectors = CORPUS[name]
    header, vecs = vectors()
    lines = [f"# {header}", f"label: {name}", f"dims: {dims[0]} {dims[1]}"]
    lines.append("eigenvalues: " + " ".join(repr(float(h)) for h in evals))
    for k, (expr, v) in enumerate(vecs, start=1):
        lines.append(f"# e{k} = {expr}")
        lines.append("eigenvector: " + " ".join(repr(float(c)) for c in v))
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    for name in CORPUS:
        (OUT / f"{name}.ham").write_text(render(name))
        print(f"wrote {name}.ham")
