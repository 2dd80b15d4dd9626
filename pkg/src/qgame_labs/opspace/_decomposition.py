import math
import numpy as np
import numpy.typing as npt
from dataclasses import dataclass
from typing import Iterator, Sequence, Union
import qgame_labs._icons as icons
from qgame_labs._tolerances import DEFAULT_TOL
from qgame_labs.linalg import ComplexMatrix, as_complex_matrix
from qgame_labs.opspace._bases import OperatorBasis, pauli_basis


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """
    Expansion coefficients of an operator over an ordered basis.
    """

    coeffs: npt.NDArray[np.complex128]

    def __post_init__(self):

        c = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if not np.all(np.isfinite(c)):
            raise ValueError(f"{icons.red_dot} Coefficients must be finite.")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, index: int) -> complex:
        return complex(self.coeffs[index])

    def __iter__(self) -> Iterator[complex]:
        return (complex(c) for c in self.coeffs)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


@dataclass(frozen=True)
class UnitaryParams:
    """
    Angles of the 2 × 2 unitary parametrization, in radians.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self):

        for name in ("alpha", "beta", "gamma", "delta"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{icons.red_dot} The '{name}' angle must be finite; got {value!r}.")


def reconstruct(
    c: Union[CoefficientVector, Sequence[complex]], basis: OperatorBasis
) -> ComplexMatrix:
    """
    Sums coefficient-weighted basis elements.

    Parameters
    ----------
    c : CoefficientVector | Sequence[complex]
        One coefficient per basis element.
    basis : OperatorBasis
        The basis.

    Returns
    -------
    ComplexMatrix
        Σ_μ c[μ]·basis[μ].
    """

    if not isinstance(c, CoefficientVector):
        c = CoefficientVector(np.asarray(c, dtype=np.complex128))
    if len(c) != len(basis):
        raise ValueError(
            f"{icons.red_dot} Got {len(c)} coefficients for a basis of {len(basis)} elements."
        )
    return as_complex_matrix(np.tensordot(c.coeffs, basis.stack, axes=1))


def decompose(
    u: npt.ArrayLike, basis: OperatorBasis, tol: float = DEFAULT_TOL
) -> CoefficientVector:
    """
    Expands an operator over an orthonormal operator basis.

    Parameters
    ----------
    u : numpy.typing.ArrayLike
        The operator, object_dim × object_dim.
    basis : OperatorBasis
        The basis.
    tol : float, default=1e-9
        Largest tolerated entry of the reconstruction residual.

    Returns
    -------
    CoefficientVector
        coeffs[μ] = inner(basis[μ], u).
    """

    u = as_complex_matrix(u, "u")
    if u.shape[0] != basis.object_dim:
        raise ValueError(
            f"{icons.red_dot} The operator has dimension {u.shape[0]}; the basis acts on dimension {basis.object_dim}."
        )
    flat = basis.stack.reshape(len(basis), -1)
    coeffs = CoefficientVector((flat.conj() @ u.reshape(-1)) / basis.object_dim)
    residual = float(np.max(np.abs(reconstruct(coeffs, basis) - u)))
    if residual > tol:
        raise ValueError(
            f"{icons.red_dot} The operator lies outside the span of the basis {basis.labels} (residual {residual:.3e})."
        )
    return coeffs


def unitary_from_params(p: UnitaryParams) -> ComplexMatrix:
    """
    The 2 × 2 unitary with angles (α, β, γ, δ) expanded over the Pauli basis.

    Parameters
    ----------
    p : UnitaryParams
        The angles.

    Returns
    -------
    ComplexMatrix
        e^{iα}(cos(γ/2)cos((β+δ)/2)·I + i·sin(γ/2)sin((β−δ)/2)·X
        − i·sin(γ/2)cos((β−δ)/2)·Y − i·cos(γ/2)sin((β+δ)/2)·Z).
    """

    half_gamma = p.gamma / 2.0
    plus = (p.beta + p.delta) / 2.0
    minus = (p.beta - p.delta) / 2.0
    coeffs = np.exp(1j * p.alpha) * np.array(
        [
            math.cos(half_gamma) * math.cos(plus),
            1j * math.sin(half_gamma) * math.sin(minus),
            -1j * math.sin(half_gamma) * math.cos(minus),
            -1j * math.cos(half_gamma) * math.sin(plus),
        ]
    )
    return reconstruct(CoefficientVector(coeffs), pauli_basis())
