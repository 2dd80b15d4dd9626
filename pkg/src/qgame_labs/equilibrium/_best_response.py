import string
import numpy as np
import numpy.typing as npt
import pandas as pd
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple
import qgame_labs._icons as icons
from qgame_labs._helper_functions import check_player_index
from qgame_labs._tolerances import CLASSICAL_OFF_DIAGONAL_TOL, EIGENSPACE_TOL
from qgame_labs.linalg import ComplexMatrix, as_complex_matrix, hermitian_eigensystem
from qgame_labs.opspace import StrategyDensity
from qgame_labs.payoff import JointStrategyState, PayoffOperator, joint_state

MODES = ("operator-density", "classical-diagonal")


@dataclass(frozen=True, eq=False)
class Profile:
    """
    One strategy state per player, under an admissibility mode.

    In "operator-density" mode any density matrix over a player's basis is a strategy.
    In "classical-diagonal" mode only probabilistic mixtures of basis elements are.

    Parameters
    ----------
    states : Tuple[StrategyDensity, ...]
        The strategy state of every player.
    mode : str, default="operator-density"
        "operator-density" or "classical-diagonal".
    """

    states: Tuple[StrategyDensity, ...]
    mode: str = "operator-density"

    def __post_init__(self):

        object.__setattr__(self, "states", tuple(self.states))
        if self.mode not in MODES:
            raise ValueError(f"{icons.red_dot} Invalid mode '{self.mode}'. Valid options: {MODES}.")
        if len(self.states) == 0:
            raise ValueError(f"{icons.red_dot} A profile needs at least one player state.")
        if self.mode == "classical-diagonal":
            for k, state in enumerate(self.states, start=1):
                if not state.is_diagonal(CLASSICAL_OFF_DIAGONAL_TOL):
                    raise ValueError(
                        f"{icons.red_dot} The state of player {k} has off-diagonal entries, which the classical-diagonal mode does not allow."
                    )

    def __len__(self) -> int:
        return len(self.states)

    def joint(self) -> JointStrategyState:
        return joint_state(self.states)


class BestResponse(NamedTuple):
    state: StrategyDensity
    value: float


def _check_operator(h: PayoffOperator, p: Profile):

    if h.n_players != len(p):
        raise ValueError(
            f"{icons.red_dot} The payoff operator is for {h.n_players} players; the profile has {len(p)}."
        )
    for k, (size, state) in enumerate(zip(h.sizes, p.states), start=1):
        if len(state) != size:
            raise ValueError(
                f"{icons.red_dot} The state of player {k} has dimension {len(state)}; the payoff operator expects {size}."
            )


def _contract(
    matrix: npt.NDArray[np.complex128],
    sizes: Sequence[int],
    rhos: Sequence[npt.NDArray[np.complex128]],
    i: int,
) -> npt.NDArray[np.complex128]:

    n = len(sizes)
    rows = string.ascii_letters[:n]
    cols = string.ascii_letters[n : 2 * n]
    subscripts = [rows + cols]
    operands = [matrix.reshape(tuple(sizes) + tuple(sizes))]
    for j in range(n):
        if j != i:
            subscripts.append(cols[j] + rows[j])
            operands.append(rhos[j])
    return np.einsum(",".join(subscripts) + "->" + rows[i] + cols[i], *operands)


def _respond(
    r: npt.NDArray[np.complex128], mode: str, spread: bool = False
) -> Tuple[npt.NDArray[np.complex128], float]:
    """
    A best response to the effective operator r and its value.

    With ``spread`` the response is the uniform mixture over every maximizer (diagonal
    entries or eigenvalues within EIGENSPACE_TOL of the largest) instead of the first one.
    """

    if mode == "classical-diagonal":
        diagonal = np.diag(r).real
        k = int(np.argmax(diagonal))
        rho = np.zeros_like(r)
        if spread:
            ties = np.flatnonzero(diagonal >= diagonal[k] - EIGENSPACE_TOL)
            rho[ties, ties] = 1.0 / len(ties)
        else:
            rho[k, k] = 1.0
        return rho, float(diagonal[k])

    values, vectors = hermitian_eigensystem((r + r.conj().T) / 2.0)
    if spread:
        top = np.asarray(vectors)[:, values >= values[0] - EIGENSPACE_TOL]
        return top @ top.conj().T / top.shape[1], float(values[0])
    first = vectors[:, 0]
    return np.outer(first, first.conj()), float(values[0])


def _payoff(rho: npt.NDArray[np.complex128], r: npt.NDArray[np.complex128]) -> float:

    return float(np.einsum("ab,ba->", rho, r).real)


def effective_payoff_operator(h: PayoffOperator, p: Profile, i: int) -> ComplexMatrix:
    """
    Player i's payoff operator with every other player's state contracted in.

    Parameters
    ----------
    h : PayoffOperator
        Player i's payoff operator.
    p : Profile
        The current profile.
    i : int
        Index of the player (0-based).

    Returns
    -------
    ComplexMatrix
        R with tr(ρ^i R) equal to player i's expected payoff for every state ρ^i,
        the other players' states held fixed.
    """

    check_player_index(i, len(p))
    _check_operator(h, p)
    return as_complex_matrix(_contract(h.matrix, h.sizes, [s.rho for s in p.states], i))


def best_response(h: PayoffOperator, p: Profile, i: int) -> BestResponse:
    """
    The best strategy state of player i against the rest of a profile.

    Parameters
    ----------
    h : PayoffOperator
        Player i's payoff operator.
    p : Profile
        The current profile; its mode decides which states are admissible.
    i : int
        Index of the player (0-based).

    Returns
    -------
    BestResponse
        In operator-density mode, the projector onto the first top eigenvector of the
        effective payoff operator and its largest eigenvalue. In classical-diagonal mode,
        the point mass on the largest diagonal entry (lowest index on ties) and that entry.
    """

    r = effective_payoff_operator(h, p, i)
    rho, value = _respond(np.asarray(r), p.mode)
    return BestResponse(StrategyDensity(p.states[i].basis, rho, validate=False), value)


def _check_operators(hs: Sequence[PayoffOperator], p: Profile):

    if len(hs) != len(p):
        raise ValueError(
            f"{icons.red_dot} Got {len(hs)} payoff operators for a profile of {len(p)} players."
        )
    for h in hs:
        _check_operator(h, p)


def _regrets(
    hs: Sequence[PayoffOperator],
    rhos: Sequence[npt.NDArray[np.complex128]],
    mode: str,
    spread: bool = False,
) -> List[Tuple[float, float, npt.NDArray[np.complex128]]]:
    """
    (payoff, best response value, best response state) of every player.
    """

    rows = []
    for i, h in enumerate(hs):
        r = _contract(h.matrix, h.sizes, rhos, i)
        rho, value = _respond(r, mode, spread)
        rows.append((_payoff(rhos[i], r), value, rho))
    return rows


def player_regrets(hs: Sequence[PayoffOperator], p: Profile) -> pd.DataFrame:
    """
    Shows how much every player could gain by deviating alone.

    Parameters
    ----------
    hs : Sequence[PayoffOperator]
        The payoff operators of all players, in player order.
    p : Profile
        The profile.

    Returns
    -------
    pandas.DataFrame
        One row per player with the current payoff, the best response value and the regret.
    """

    _check_operators(hs, p)
    rows = _regrets(hs, [s.rho for s in p.states], p.mode)
    return pd.DataFrame(
        [
            {
                "Player": k,
                "Payoff": payoff,
                "Best Response Value": value,
                "Regret": value - payoff,
            }
            for k, (payoff, value, _) in enumerate(rows, start=1)
        ]
    )


def exploitability(hs: Sequence[PayoffOperator], p: Profile) -> float:
    """
    The largest gain any single player can get by deviating; zero at a Nash equilibrium.

    Parameters
    ----------
    hs : Sequence[PayoffOperator]
        The payoff operators of all players, in player order.
    p : Profile
        The profile.

    Returns
    -------
    float
        max over players of best response value minus current payoff.
    """

    _check_operators(hs, p)
    rows = _regrets(hs, [s.rho for s in p.states], p.mode)
    return max(value - payoff for payoff, value, _ in rows)
