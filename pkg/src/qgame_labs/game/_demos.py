import numpy as np
import qgame_labs._icons as icons
from qgame_labs._log import log
from qgame_labs.opspace import OperatorBasis, classical_basis, pauli_basis
from qgame_labs.game._definition import GameDefinition, PlayerSpec
from qgame_labs.game._table_games import ClassicalTableGame, classical_game_from_table

DEMO_GAMES = ("pfg", "sfg")


def _coin_game(name: str, basis: OperatorBasis) -> GameDefinition:

    heads_up = np.diag([1.0, 0.0]).astype(np.complex128)
    heads_pays = np.diag([1.0, -1.0]).astype(np.complex128)
    return GameDefinition(
        object_dim=2,
        initial_state=heads_up,
        players=(
            PlayerSpec("player 1", basis, heads_pays),
            PlayerSpec("player 2", basis, -heads_pays),
        ),
        name=name,
    )


@log
def make_pfg() -> GameDefinition:
    """
    Penny flip: a coin starts heads up and each player either leaves it or flips it.

    Player 1 wins one unit if the coin ends heads up and loses one otherwise;
    player 2 is paid the opposite.

    Returns
    -------
    GameDefinition
        The two-player zero-sum game over the classical basis (I, X).
    """

    return _coin_game("pfg", classical_basis(2))


@log
def make_sfg() -> GameDefinition:
    """
    Spin flip: the penny flip with a spin-1/2 object, so each player may apply any
    operator spanned by (I, X, Y, Z).

    Returns
    -------
    GameDefinition
        The two-player zero-sum game over the Pauli basis.
    """

    return _coin_game("sfg", pauli_basis())


def make_pfg_table() -> ClassicalTableGame:
    """
    The penny flip written as a classical payoff table over the strategies (I, X).

    Returns
    -------
    ClassicalTableGame
        Player 1 wins when both players make the same choice.
    """

    matching = np.array([[1.0, -1.0], [-1.0, 1.0]])
    return classical_game_from_table(
        [matching, -matching], d=2, n_players=2, labels=("I", "X"), name="pfg-table"
    )


def make_demo(name: str) -> GameDefinition:

    factories = {"pfg": make_pfg, "sfg": make_sfg}
    if name not in factories:
        raise ValueError(f"{icons.red_dot} Invalid demo '{name}'. Valid options: {DEMO_GAMES}.")
    return factories[name]()
