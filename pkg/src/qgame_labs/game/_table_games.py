import numpy as np
import numpy.typing as npt
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple
import qgame_labs._icons as icons
from qgame_labs._helper_functions import joint_labels
from qgame_labs.opspace import OperatorBasis, classical_basis

TABLE_GAME_KIND = "classical-table"


@dataclass(frozen=True, eq=False)
class ClassicalTableGame:
    """
    A classical game given directly by its payoff table.

    Parameters
    ----------
    n_players : int
        Number of players.
    d : int
        Number of pure strategies of every player.
    tables : numpy.ndarray
        Read-only payoffs of shape (n_players,) + (d,) * n_players; ``tables[i][s1, ..., sN]``
        is player i's payoff when player k plays strategy s_k.
    labels : Tuple[str, ...]
        Names of the d pure strategies.
    name : str, default="table"
        A display name.
    """

    n_players: int
    d: int
    tables: npt.NDArray[np.float64]
    labels: Tuple[str, ...]
    name: str = "table"

    @property
    def kind(self) -> str:
        return TABLE_GAME_KIND

    @property
    def basis(self) -> OperatorBasis:
        """
        The permutation basis standing in for the pure strategies.
        """
        return OperatorBasis(
            object_dim=self.d,
            elements=classical_basis(self.d).elements,
            kind="classical",
            labels=self.labels,
        )

    @property
    def bases(self) -> Tuple[OperatorBasis, ...]:
        basis = self.basis
        return (basis,) * self.n_players

    @property
    def joint_dim(self) -> int:
        return self.d**self.n_players

    def joint_labels(self):
        return joint_labels([self.labels] * self.n_players)

    def payoff(self, player: int, profile: Sequence[int]) -> float:
        """
        Player's table payoff for a pure profile of strategy indices.
        """
        return float(self.tables[player][tuple(profile)])


def classical_game_from_table(
    table: npt.ArrayLike,
    d: int,
    n_players: int,
    labels: Optional[Sequence[str]] = None,
    name: str = "table",
) -> ClassicalTableGame:
    """
    Builds a classical game from per-profile payoffs.

    Parameters
    ----------
    table : numpy.typing.ArrayLike
        Either a sequence with one payoff tensor of shape (d,) * n_players per player, or a
        single array of shape (n_players,) + (d,) * n_players.
    d : int
        Number of pure strategies per player, at least 2.
    n_players : int
        Number of players, at least 1.
    labels : Sequence[str], default=None
        Strategy names. Defaults to the labels of the classical basis of dimension d.
    name : str, default="table"
        A display name.

    Returns
    -------
    ClassicalTableGame
        The game record, flagged "classical-table".
    """

    if not isinstance(d, (int, np.integer)) or d < 2:
        raise ValueError(f"{icons.red_dot} A table game needs d >= 2 strategies; got {d!r}.")
    if not isinstance(n_players, (int, np.integer)) or n_players < 1:
        raise ValueError(f"{icons.red_dot} A table game needs at least one player; got {n_players!r}.")

    try:
        tables = np.array(table, dtype=float)
    except (TypeError, ValueError):
        raise ValueError(
            f"{icons.red_dot} The payoff table is incomplete: every player needs a payoff for all {d ** n_players} profiles."
        )
    expected = (n_players,) + (d,) * n_players
    if tables.shape != expected:
        raise ValueError(
            f"{icons.red_dot} The payoff table is incomplete: expected shape {expected}, got {tables.shape}."
        )
    if not np.all(np.isfinite(tables)):
        raise ValueError(f"{icons.red_dot} The payoff table contains non-finite payoffs.")
    tables.setflags(write=False)

    if labels is None:
        labels = classical_basis(d).labels
    if len(labels) != d:
        raise ValueError(f"{icons.red_dot} Got {len(labels)} strategy labels for {d} strategies.")

    return ClassicalTableGame(
        n_players=int(n_players), d=int(d), tables=tables, labels=tuple(labels), name=name
    )
