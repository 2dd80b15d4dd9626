import threading
import weakref
import numpy as np
import numpy.typing as npt
import pandas as pd
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union
import qgame_labs._icons as icons
from qgame_labs._helper_functions import check_player_index
from qgame_labs._log import log, logger
from qgame_labs._tolerances import HERMITIAN_TOL, OPERATOR_HERMITIAN_TOL
from qgame_labs.game import ClassicalTableGame, GameDefinition, check_game
from qgame_labs.linalg import ComplexMatrix, as_complex_matrix
from qgame_labs.opspace import OperatorBasis


@dataclass(frozen=True, eq=False)
class PayoffOperator:
    """
    The Hermitian payoff operator of one player over the joint operator basis.

    A player's expected payoff is tr(ρ^S H) for the joint strategy state ρ^S.

    Parameters
    ----------
    player : int
        Index of the player (0-based).
    joint_dim : int
        Product of the basis sizes of all players.
    matrix : ComplexMatrix
        The operator; rows and columns follow the joint basis, player 1 varying slowest.
    bases : Tuple[OperatorBasis, ...]
        The strategy basis of every player.
    labels : Tuple[str, ...]
        Joint basis labels.
    """

    player: int
    joint_dim: int
    matrix: ComplexMatrix
    bases: Tuple[OperatorBasis, ...]
    labels: Tuple[str, ...]

    def __post_init__(self):

        matrix = as_complex_matrix(self.matrix, "payoff operator")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "bases", tuple(self.bases))
        sizes = [len(b) for b in self.bases]
        if int(np.prod(sizes)) != self.joint_dim or matrix.shape[0] != self.joint_dim:
            raise ValueError(
                f"{icons.red_dot} The payoff operator has dimension {matrix.shape[0]}; the bases {sizes} need {int(np.prod(sizes))}."
            )
        if len(self.labels) != self.joint_dim:
            raise ValueError(f"{icons.red_dot} Expected {self.joint_dim} joint labels, got {len(self.labels)}.")
        residual = self.hermiticity_residual()
        if residual > OPERATOR_HERMITIAN_TOL:
            raise ValueError(
                f"{icons.red_dot} The payoff operator of player {self.player + 1} is not Hermitian (residual {residual:.3e})."
            )

    @property
    def n_players(self) -> int:
        return len(self.bases)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(b) for b in self.bases)

    def hermiticity_residual(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))


_CACHE: "weakref.WeakKeyDictionary[GameDefinition, Dict[int, PayoffOperator]]" = weakref.WeakKeyDictionary()
_CACHE_LOCK = threading.Lock()


def joint_operations(g: GameDefinition) -> npt.NDArray[np.complex128]:
    """
    The composed operation M = μ_N ⋯ μ_1 of every joint basis element.

    Parameters
    ----------
    g : GameDefinition
        The game.

    Returns
    -------
    numpy.ndarray
        Array of shape (joint_dim, d, d), joint index player-1-major.
    """

    ops = np.asarray(g.bases[0].stack)
    for basis in g.bases[1:]:
        ops = np.einsum("bij,ajk->abik", basis.stack, ops).reshape(-1, g.object_dim, g.object_dim)
    return ops


def _payoff_matrix(g: GameDefinition, scale: ComplexMatrix) -> npt.NDArray[np.complex128]:

    # Only the Hermitian parts of P and ρ0 enter H.
    scale = (scale + scale.conj().T) / 2.0
    rho0 = (g.initial_state + g.initial_state.conj().T) / 2.0
    ops = joint_operations(g)
    evolved = ops @ rho0
    # H[m, n] = tr(P M_n ρ0 M_m†)
    return np.einsum("ab,nbc,mac->mn", scale, evolved, ops.conj())


@log
def build_payoff_operator(
    g: GameDefinition, i: int, tol: float = HERMITIAN_TOL
) -> PayoffOperator:
    """
    Builds the payoff operator of one player from the game's manipulative definition.

    Entry (μ⃗, ν⃗) is tr(P^i M_ν⃗ ρ0 M_μ⃗†), so tr(ρ^S H^i) reproduces the payoff of every
    pure profile. Operators are built once per game and player and cached.

    Parameters
    ----------
    g : GameDefinition
        A valid game.
    i : int
        Index of the player (0-based).
    tol : float, default=1e-12
        Largest tolerated Hermiticity residual, relative to the largest entry when that
        exceeds 1.

    Returns
    -------
    PayoffOperator
        The player's payoff operator.
    """

    check_player_index(i, g.n_players)
    with _CACHE_LOCK:
        built = _CACHE.setdefault(g, {})
        if i in built:
            return built[i]

        check_game(g)
        matrix = _payoff_matrix(g, g.players[i].scale)
        residual = float(np.max(np.abs(matrix - matrix.conj().T)))
        if residual > tol * max(1.0, float(np.max(np.abs(matrix)))):
            raise ValueError(
                f"{icons.red_dot} The payoff operator of player {i + 1} in the '{g.name}' game is not Hermitian (residual {residual:.3e})."
            )
        matrix = (matrix + matrix.conj().T) / 2.0
        operator = PayoffOperator(
            player=i,
            joint_dim=g.joint_dim,
            matrix=matrix,
            bases=g.bases,
            labels=tuple(g.joint_labels()),
        )
        logger.debug("Built the %d×%d payoff operator of player %d for '%s'", g.joint_dim, g.joint_dim, i + 1, g.name)
        built[i] = operator
        return operator


def classical_payoff_operator(t: ClassicalTableGame, i: int) -> PayoffOperator:
    """
    The diagonal payoff operator of a table game.

    Parameters
    ----------
    t : ClassicalTableGame
        The table game.
    i : int
        Index of the player (0-based).

    Returns
    -------
    PayoffOperator
        diag of the player's table, profiles in joint-basis order.
    """

    check_player_index(i, t.n_players)
    return PayoffOperator(
        player=i,
        joint_dim=t.joint_dim,
        matrix=np.diag(t.tables[i].reshape(-1)).astype(np.complex128),
        bases=t.bases,
        labels=tuple(t.joint_labels()),
    )


def payoff_operators(g: Union[GameDefinition, ClassicalTableGame]) -> List[PayoffOperator]:
    """
    The payoff operators of every player of a game.
    """

    if isinstance(g, ClassicalTableGame):
        return [classical_payoff_operator(g, i) for i in range(g.n_players)]
    return [build_payoff_operator(g, i) for i in range(g.n_players)]


def list_payoff_entries(h: PayoffOperator, tol: float = HERMITIAN_TOL) -> pd.DataFrame:
    """
    Shows the non-zero entries of a payoff operator.

    Parameters
    ----------
    h : PayoffOperator
        The payoff operator.
    tol : float, default=1e-12
        Entries with a smaller magnitude are skipped.

    Returns
    -------
    pandas.DataFrame
        One row per non-zero entry, labelled by the joint basis.
    """

    rows, cols = np.nonzero(np.abs(h.matrix) > tol)
    return pd.DataFrame(
        {
            "Row": [h.labels[r] for r in rows],
            "Column": [h.labels[c] for c in cols],
            "Real": h.matrix[rows, cols].real,
            "Imaginary": h.matrix[rows, cols].imag,
        },
        columns=["Row", "Column", "Real", "Imaginary"],
    )
