import numpy as np
import numpy.typing as npt
from dataclasses import InitVar, dataclass
from typing import Sequence, Union
import qgame_labs._icons as icons
from qgame_labs._helper_functions import validate_pdf
from qgame_labs._tolerances import CLASSICAL_OFF_DIAGONAL_TOL, DEFAULT_TOL, RANK_TOL
from qgame_labs.linalg import (
    ComplexMatrix,
    as_complex_matrix,
    hermitian_eigensystem,
    is_density_matrix,
    is_unitary,
)
from qgame_labs.opspace._bases import OperatorBasis
from qgame_labs.opspace._decomposition import CoefficientVector, decompose


@dataclass(frozen=True, eq=False)
class StrategyDensity:
    """
    A density matrix over a player's operator basis.

    Diagonal states are classical mixtures of basis operators; off-diagonal entries
    encode superpositions of operators.

    Parameters
    ----------
    basis : OperatorBasis
        The strategy basis.
    rho : ComplexMatrix
        Density matrix of dimension len(basis).
    validate : bool, default=True
        Checks that rho is a density matrix. Constructors that are valid by
        construction switch it off.
    """

    basis: OperatorBasis
    rho: ComplexMatrix
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):

        rho = as_complex_matrix(self.rho, "rho")
        object.__setattr__(self, "rho", rho)
        if rho.shape[0] != len(self.basis):
            raise ValueError(
                f"{icons.red_dot} The strategy density has dimension {rho.shape[0]}; the basis has {len(self.basis)} elements."
            )
        if validate and not is_density_matrix(rho, DEFAULT_TOL):
            raise ValueError(f"{icons.red_dot} The strategy density is not a valid density matrix.")

    def __len__(self) -> int:
        return len(self.basis)

    def is_diagonal(self, tol: float = CLASSICAL_OFF_DIAGONAL_TOL) -> bool:

        off = self.rho - np.diag(np.diag(self.rho))
        return bool(np.max(np.abs(off)) <= tol)

    def probabilities(self) -> npt.NDArray[np.float64]:
        """
        Weights of the basis elements (the diagonal of rho).
        """
        return np.diag(self.rho).real.copy()

    def rank(self, tol: float = RANK_TOL) -> int:

        values, _ = hermitian_eigensystem(self.rho)
        return int(np.sum(values > tol))


def strategy_from_coefficients(
    c: Union[CoefficientVector, Sequence[complex]], basis: OperatorBasis
) -> StrategyDensity:
    """
    The rank-1 strategy state c·c† / ‖c‖² of a coefficient vector.

    The coefficients need not describe a unitary, so the state may have no
    physical counterpart; see :func:`qgame_labs.equilibrium.unitary_realizability`.

    Parameters
    ----------
    c : CoefficientVector | Sequence[complex]
        One coefficient per basis element.
    basis : OperatorBasis
        The strategy basis.

    Returns
    -------
    StrategyDensity
        A pure strategy state.
    """

    if not isinstance(c, CoefficientVector):
        c = CoefficientVector(np.asarray(c, dtype=np.complex128))
    if len(c) != len(basis):
        raise ValueError(
            f"{icons.red_dot} Got {len(c)} coefficients for a basis of {len(basis)} elements."
        )
    norm = c.norm()
    if norm == 0.0:
        raise ValueError(f"{icons.red_dot} A zero coefficient vector has no strategy state.")
    v = c.coeffs / norm
    return StrategyDensity(basis, np.outer(v, v.conj()), validate=False)


def pure_strategy_state(
    u: npt.ArrayLike, basis: OperatorBasis, tol: float = DEFAULT_TOL
) -> StrategyDensity:
    """
    The strategy state of playing one unitary operator.

    Parameters
    ----------
    u : numpy.typing.ArrayLike
        A unitary inside the span of the basis.
    basis : OperatorBasis
        The strategy basis.
    tol : float, default=1e-9
        Tolerance of the span, normalization and unitarity checks.

    Returns
    -------
    StrategyDensity
        rho[μ][ν] = c[μ]·conj(c[ν]) with c the coefficients of u. Global phases cancel.
    """

    c = decompose(u, basis, tol)
    weight = c.norm() ** 2
    if abs(weight - 1.0) > tol:
        raise ValueError(
            f"{icons.red_dot} The operator is not unitary: its coefficients have squared norm {weight!r}."
        )
    if not is_unitary(u, tol):
        raise ValueError(f"{icons.red_dot} The operator is not unitary; only unitary operators have pure strategy states.")
    return strategy_from_coefficients(c, basis)


def classical_mixture_state(
    pdf: Sequence[float], basis: OperatorBasis, tol: float = DEFAULT_TOL
) -> StrategyDensity:
    """
    A probabilistic mixture of basis operators.

    Parameters
    ----------
    pdf : Sequence[float]
        Probability of each basis element.
    basis : OperatorBasis
        The strategy basis.
    tol : float, default=1e-9
        Tolerance of the normalization check.

    Returns
    -------
    StrategyDensity
        The diagonal state diag(pdf).
    """

    weights = validate_pdf(pdf, len(basis), tol)
    return StrategyDensity(basis, np.diag(weights).astype(np.complex128), validate=False)


def maximally_mixed_state(basis: OperatorBasis) -> StrategyDensity:

    n = len(basis)
    return classical_mixture_state(np.full(n, 1.0 / n), basis)
