import numpy as np
from typing import List
import qgame_labs._icons as icons
from qgame_labs._tolerances import DEFAULT_TOL, PAYOFF_RESIDUE_TOL
from qgame_labs.linalg import ComplexMatrix, as_complex_matrix, expectation, is_unitary
from qgame_labs.opspace import decompose
from qgame_labs.game._definition import GameDefinition, PureProfile


def joint_operation(
    g: GameDefinition, p: PureProfile, tol: float = DEFAULT_TOL
) -> ComplexMatrix:
    """
    The operator L = s^N ⋯ s¹ applied to the object by a pure profile.

    Parameters
    ----------
    g : GameDefinition
        The game.
    p : PureProfile
        One unitary per player.
    tol : float, default=1e-9
        Tolerance of the unitarity and span checks.

    Returns
    -------
    ComplexMatrix
        The composed operation.
    """

    if len(p) != g.n_players:
        raise ValueError(
            f"{icons.red_dot} The profile has {len(p)} strategies for a game with {g.n_players} players."
        )
    operation = np.eye(g.object_dim, dtype=np.complex128)
    for k, (player, s) in enumerate(zip(g.players, p.strategies), start=1):
        if s.shape != (g.object_dim, g.object_dim):
            raise ValueError(
                f"{icons.red_dot} The strategy of player {k} has shape {s.shape}; expected {(g.object_dim, g.object_dim)}."
            )
        if not is_unitary(s, tol):
            raise ValueError(f"{icons.red_dot} The strategy of player {k} is not unitary.")
        decompose(s, player.basis, tol)
        operation = s @ operation
    return as_complex_matrix(operation)


def evolve_object(
    g: GameDefinition, p: PureProfile, tol: float = DEFAULT_TOL
) -> ComplexMatrix:
    """
    The object's final state L ρ0 L† after every player has acted.

    Parameters
    ----------
    g : GameDefinition
        The game.
    p : PureProfile
        One unitary per player.
    tol : float, default=1e-9
        Tolerance of the unitarity and span checks.

    Returns
    -------
    ComplexMatrix
        The final density matrix of the object.
    """

    operation = joint_operation(g, p, tol)
    return as_complex_matrix(operation @ g.initial_state @ operation.conj().T)


def manipulative_payoff(
    g: GameDefinition,
    p: PureProfile,
    tol: float = DEFAULT_TOL,
    residue_tol: float = PAYOFF_RESIDUE_TOL,
) -> List[float]:
    """
    Pays every player by reading its scale operator out of the final object state.

    Parameters
    ----------
    g : GameDefinition
        The game.
    p : PureProfile
        One unitary per player.
    tol : float, default=1e-9
        Tolerance of the unitarity and span checks.
    residue_tol : float, default=1e-10
        Largest tolerated imaginary part of a payoff.

    Returns
    -------
    List[float]
        payoff[i] = tr(P^i L ρ0 L†), one value per player.
    """

    final_state = evolve_object(g, p, tol)
    return [expectation(player.scale, final_state, residue_tol) for player in g.players]
