import numpy as np
import numpy.typing as npt
import pandas as pd
from dataclasses import dataclass
from typing import List, Sequence, Tuple
import qgame_labs._icons as icons
from qgame_labs._helper_functions import joint_labels
from qgame_labs._tolerances import DEFAULT_TOL
from qgame_labs.linalg import (
    ComplexMatrix,
    as_complex_matrix,
    is_density_matrix,
    is_hermitian,
)
from qgame_labs.opspace import OperatorBasis, verify_orthonormal

COMPOSITION = "later players multiply on the left"


@dataclass(frozen=True, eq=False)
class PlayerSpec:
    """
    A player of a game: a name, a strategy basis and a payoff scale operator.
    """

    name: str
    basis: OperatorBasis
    scale: ComplexMatrix

    def __post_init__(self):
        object.__setattr__(self, "scale", as_complex_matrix(self.scale, f"scale of {self.name}"))


@dataclass(frozen=True, eq=False)
class GameDefinition:
    """
    A game given by how its players manipulate a shared object.

    The players act on the object in order, so the joint operation of a profile
    (s¹, ..., s^N) is L = s^N ⋯ s¹ and player i is paid tr(P^i L ρ0 L†).

    Parameters
    ----------
    object_dim : int
        Dimension of the object's state space.
    initial_state : ComplexMatrix
        The object's state ρ0 before any player acts.
    players : Tuple[PlayerSpec, ...]
        The players, in the order in which they act.
    name : str, default="custom"
        A display name.
    """

    object_dim: int
    initial_state: ComplexMatrix
    players: Tuple[PlayerSpec, ...]
    name: str = "custom"

    def __post_init__(self):

        object.__setattr__(self, "initial_state", as_complex_matrix(self.initial_state, "initial_state"))
        object.__setattr__(self, "players", tuple(self.players))
        if len(self.players) == 0:
            raise ValueError(f"{icons.red_dot} A game needs at least one player.")

    @property
    def composition(self) -> str:
        return COMPOSITION

    @property
    def n_players(self) -> int:
        return len(self.players)

    @property
    def bases(self) -> Tuple[OperatorBasis, ...]:
        return tuple(p.basis for p in self.players)

    @property
    def joint_dim(self) -> int:
        return int(np.prod([len(b) for b in self.bases]))

    def joint_labels(self) -> List[str]:
        """
        Labels of the joint basis, player 1 varying slowest.
        """
        return joint_labels([b.labels for b in self.bases])


@dataclass(frozen=True, eq=False)
class PureProfile:
    """
    One unitary strategy per player.
    """

    strategies: Tuple[ComplexMatrix, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "strategies",
            tuple(as_complex_matrix(s, f"strategy {k + 1}") for k, s in enumerate(self.strategies)),
        )

    def __len__(self) -> int:
        return len(self.strategies)

    @classmethod
    def from_labels(cls, game: GameDefinition, labels: Sequence[str]) -> "PureProfile":
        """
        The profile in which every player plays one of its basis elements, named by label.
        """
        if len(labels) != game.n_players:
            raise ValueError(
                f"{icons.red_dot} Got {len(labels)} labels for a game with {game.n_players} players."
            )
        return cls(tuple(p.basis[p.basis.index(label)] for p, label in zip(game.players, labels)))


def validate_game(g: GameDefinition) -> List[str]:
    """
    Lists everything that keeps a game definition from being playable.

    Parameters
    ----------
    g : GameDefinition
        The game.

    Returns
    -------
    List[str]
        Human-readable violations; empty if the game is valid.
    """

    violations = []
    d = g.object_dim
    if g.initial_state.shape != (d, d):
        violations.append(
            f"The initial state has shape {g.initial_state.shape}; expected {(d, d)}."
        )
    elif not is_density_matrix(g.initial_state, DEFAULT_TOL):
        violations.append("The initial state is not a density matrix.")

    for k, player in enumerate(g.players, start=1):
        who = f"Player {k} ('{player.name}')"
        if player.basis.object_dim != d:
            violations.append(
                f"{who} has a basis acting on dimension {player.basis.object_dim}; the object has dimension {d}."
            )
        elif not verify_orthonormal(player.basis):
            violations.append(f"{who} has a basis that is not made of orthonormal unitaries.")
        if player.scale.shape != (d, d):
            violations.append(f"{who} has a scale operator of shape {player.scale.shape}; expected {(d, d)}.")
        elif not is_hermitian(player.scale, DEFAULT_TOL):
            violations.append(f"{who} has a scale operator that is not Hermitian.")

    return violations


def check_game(g: GameDefinition):

    violations = validate_game(g)
    if violations:
        raise ValueError(
            f"{icons.red_dot} The '{g.name}' game is invalid: " + " ".join(violations)
        )


def list_players(g: GameDefinition) -> pd.DataFrame:
    """
    Shows the players of a game.

    Parameters
    ----------
    g : GameDefinition
        The game.

    Returns
    -------
    pandas.DataFrame
        One row per player, in the order the players act.
    """

    rows = [
        {
            "Player": k,
            "Name": p.name,
            "Basis Kind": p.basis.kind.capitalize(),
            "Basis Size": len(p.basis),
            "Basis Labels": ", ".join(p.basis.labels),
            "Scale Trace": float(np.trace(p.scale).real),
        }
        for k, p in enumerate(g.players, start=1)
    ]
    return pd.DataFrame(rows)


def scale_sum(g: GameDefinition) -> npt.NDArray[np.complex128]:
    """
    Sum of all payoff scale operators; zero for zero-sum games.
    """

    return np.sum([p.scale for p in g.players], axis=0)
