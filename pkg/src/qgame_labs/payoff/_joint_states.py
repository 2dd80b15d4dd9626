import functools
import numpy as np
import numpy.typing as npt
from dataclasses import InitVar, dataclass
from typing import Optional, Protocol, Sequence, Tuple
import qgame_labs._icons as icons
from qgame_labs._tolerances import DEFAULT_TOL
from qgame_labs.linalg import ComplexMatrix, as_complex_matrix, is_density_matrix
from qgame_labs.opspace import OperatorBasis, StrategyDensity
from qgame_labs.payoff._payoff_operators import PayoffOperator


class HasBases(Protocol):
    @property
    def bases(self) -> Tuple[OperatorBasis, ...]: ...


@dataclass(frozen=True, eq=False)
class JointStrategyState:
    """
    The strategy state of all players over the joint operator basis.

    Parameters
    ----------
    matrix : ComplexMatrix
        Density matrix of dimension joint_dim, player 1 varying slowest.
    factorized : Tuple[StrategyDensity, ...], default=None
        The per-player states when the joint state is their product.
    validate : bool, default=True
        Checks that the matrix is a density matrix.
    """

    matrix: ComplexMatrix
    factorized: Optional[Tuple[StrategyDensity, ...]] = None
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):

        object.__setattr__(self, "matrix", as_complex_matrix(self.matrix, "joint state"))
        if validate and not is_density_matrix(self.matrix, DEFAULT_TOL):
            raise ValueError(f"{icons.red_dot} The joint strategy state is not a valid density matrix.")

    @property
    def joint_dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_product(self) -> bool:
        return self.factorized is not None


def _check_bases(states: Sequence[StrategyDensity], reference: Optional[HasBases]):

    if reference is None:
        return
    bases = reference.bases
    if len(bases) != len(states):
        raise ValueError(
            f"{icons.red_dot} Got {len(states)} strategy states for {len(bases)} players."
        )
    for k, (state, basis) in enumerate(zip(states, bases), start=1):
        if not state.basis.matches(basis):
            raise ValueError(
                f"{icons.red_dot} The state of player {k} is over the basis {state.basis.labels}; the player uses {basis.labels}."
            )


def joint_state(
    states: Sequence[StrategyDensity], game: Optional[HasBases] = None
) -> JointStrategyState:
    """
    The product state of independent players.

    Parameters
    ----------
    states : Sequence[StrategyDensity]
        One strategy state per player, in player order.
    game : GameDefinition | ClassicalTableGame | PayoffOperator, default=None
        If given, every state must be over the corresponding player's basis.

    Returns
    -------
    JointStrategyState
        The Kronecker product with player 1 major; the factors are kept.
    """

    states = tuple(states)
    if len(states) == 0:
        raise ValueError(f"{icons.red_dot} A joint state needs at least one player state.")
    _check_bases(states, game)
    matrix = functools.reduce(np.kron, [s.rho for s in states])
    return JointStrategyState(matrix, factorized=states, validate=False)


def correlated_state(matrix: npt.ArrayLike, game: HasBases) -> JointStrategyState:
    """
    A joint state that need not factor into independent player states.

    Parameters
    ----------
    matrix : numpy.typing.ArrayLike
        Density matrix over the joint basis.
    game : GameDefinition | ClassicalTableGame | PayoffOperator
        Provides the player bases.

    Returns
    -------
    JointStrategyState
        The validated joint state, without factors.
    """

    joint_dim = int(np.prod([len(b) for b in game.bases]))
    m = as_complex_matrix(matrix, "joint state")
    if m.shape[0] != joint_dim:
        raise ValueError(
            f"{icons.red_dot} The joint state has dimension {m.shape[0]}; the game needs {joint_dim}."
        )
    return JointStrategyState(m)


def expected_payoff(
    s: JointStrategyState, h: PayoffOperator, residue_tol: float = DEFAULT_TOL
) -> float:
    """
    A player's expected payoff tr(ρ^S H).

    Parameters
    ----------
    s : JointStrategyState
        The joint strategy state.
    h : PayoffOperator
        The player's payoff operator.
    residue_tol : float, default=1e-9
        Largest tolerated imaginary part of the trace.

    Returns
    -------
    float
        The expected payoff.
    """

    if s.joint_dim != h.joint_dim:
        raise ValueError(
            f"{icons.red_dot} The joint state has dimension {s.joint_dim}; the payoff operator has {h.joint_dim}."
        )
    value = complex(np.einsum("ij,ji->", s.matrix, h.matrix))
    if abs(value.imag) > residue_tol:
        raise ValueError(
            f"{icons.red_dot} The expected payoff has an imaginary residue of {value.imag!r}."
        )
    return value.real
