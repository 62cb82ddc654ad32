"""Exception hierarchy.

Input problems (malformed files, invalid Hamiltonians) derive from
:class:`InputError`; everything else raised during a computation derives from
:class:`ComputeError`. The CLI maps the two families to distinct exit codes.
"""


class ThermoentError(Exception):
    """Base class for all package errors."""


class InputError(ThermoentError, ValueError):
    pass


class ComputeError(ThermoentError, ArithmeticError):
    pass


class NotSquare(InputError):
    pass


class NotHermitian(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class NotUnitVector(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class UnsupportedDimension(InputError):
    pass


class HamiltonianSyntaxError(InputError):
    """Malformed Hamiltonian file; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotOrthonormal(InputError):
    """Eigenvectors fail the orthonormality check.

    ``pair`` is the worst offending index pair ``(i, j)`` and ``overlap`` the
    corresponding inner product (for ``i == j`` that is the squared norm).
    """

    def __init__(self, pair, overlap, tol):
        self.pair = pair
        self.overlap = overlap
        i, j = pair
        if i == j:
            what = f"eigenvector {i} has squared norm {abs(overlap):.3e}"
        else:
            what = f"eigenvectors {i} and {j} have overlap {abs(overlap):.3e}"
        super().__init__(f"{what} (tolerance {tol:g})")


class NegativeTemperature(InputError):
    pass


class ResolutionTooSmall(InputError):
    pass


class NoConvergence(ComputeError):
    pass


class EtaAboveMeanEnergy(ComputeError):
    pass
