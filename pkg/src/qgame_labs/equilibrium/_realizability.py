import numpy as np
from dataclasses import dataclass
from typing import Optional
from qgame_labs._tolerances import DEFAULT_TOL, RANK_TOL
from qgame_labs.linalg import ComplexMatrix, hermitian_eigensystem
from qgame_labs.opspace import CoefficientVector, StrategyDensity, reconstruct

REALIZABLE = "realizable"
NOT_REALIZABLE = "not realizable"
MIXED = "mixed - not checked"


@dataclass(frozen=True, eq=False)
class RealizabilityReport:
    """
    Whether a strategy state corresponds to playing a single unitary operator.

    Parameters
    ----------
    status : str
        "realizable", "not realizable" or "mixed - not checked".
    rank : int
        Numerical rank of the state.
    operator : ComplexMatrix, default=None
        For rank-1 states, the operator rebuilt from the state's coefficient vector
        (up to a global phase).
    unitarity_residual : float, default=None
        For rank-1 states, ‖B·B† − I‖_max of that operator.
    """

    status: str
    rank: int
    operator: Optional[ComplexMatrix] = None
    unitarity_residual: Optional[float] = None

    @property
    def realizable(self) -> bool:
        return self.status == REALIZABLE


def unitary_realizability(
    state: StrategyDensity, tol: float = DEFAULT_TOL, rank_tol: float = RANK_TOL
) -> RealizabilityReport:
    """
    Audits whether a strategy state can be played as one unitary operator.

    Parameters
    ----------
    state : StrategyDensity
        The strategy state.
    tol : float, default=1e-9
        Unitarity tolerance of the rebuilt operator.
    rank_tol : float, default=1e-10
        Eigenvalues above this count toward the rank.

    Returns
    -------
    RealizabilityReport
        Mixed states are reported without a check.
    """

    values, vectors = hermitian_eigensystem(state.rho)
    rank = int(np.sum(values > rank_tol))
    if rank != 1:
        return RealizabilityReport(status=MIXED, rank=rank)

    c = CoefficientVector(np.sqrt(values[0]) * vectors[:, 0])
    operator = reconstruct(c, state.basis)
    d = state.basis.object_dim
    residual = float(np.max(np.abs(operator @ operator.conj().T - np.eye(d))))
    return RealizabilityReport(
        status=REALIZABLE if residual <= tol else NOT_REALIZABLE,
        rank=1,
        operator=operator,
        unitarity_residual=residual,
    )
