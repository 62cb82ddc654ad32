"""Thermal entanglement of qubit/qubit and qubit/qutrit Hamiltonians.

Gibbs states across temperature, exact PPT entanglement decisions, the
separability modulus, and the critical temperatures of the thermal family.
"""

__version__ = "0.1.0"

from .linalg import BipartiteShape, QUBIT_QUBIT, QUBIT_QUTRIT, partial_transpose  # noqa: E402
from .hamiltonian import (  # noqa: E402
    INFINITY,
    DensityMatrix,
    HamiltonianSpec,
    energy,
    gibbs_state,
    normalize_spec,
    purity,
)
from .separability import analyze, purity_detector  # noqa: E402
from .witness import eta_grid_oracle, eta_seesaw, t_h  # noqa: E402
from .critical import critical_temperatures, find_segments, scan, t_star  # noqa: E402
from .corpus import EXAMPLES, load_example  # noqa: E402
from .fileformat import parse_hamiltonian  # noqa: E402
