import numpy as np
import numpy.typing as npt
import pandas as pd
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union
import qgame_labs._icons as icons
from qgame_labs._log import log, logger
from qgame_labs.opspace import OperatorBasis, StrategyDensity
from qgame_labs.payoff import PayoffOperator
from qgame_labs.equilibrium._best_response import MODES, Profile, _check_operators, _regrets

INITIAL_PROFILES = ("uniform", "random")


@dataclass(frozen=True, eq=False)
class SolveReport:
    """
    Outcome of an equilibrium search.

    Parameters
    ----------
    profile : Profile
        The final profile.
    exploitability : float
        Exploitability of the final profile.
    payoffs : Tuple[float, ...]
        Expected payoff of every player at the final profile.
    iterations : int
        Number of best-response rounds evaluated.
    converged : bool
        True if the exploitability reached ``eps``.
    eps : float
        The target exploitability.
    history : Tuple[float, ...]
        Exploitability measured at each round.
    """

    profile: Profile
    exploitability: float
    payoffs: Tuple[float, ...]
    iterations: int
    converged: bool
    eps: float
    history: Tuple[float, ...]

    def history_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {"Iteration": np.arange(1, len(self.history) + 1), "Exploitability": self.history}
        )


def _initial_rho(
    basis: OperatorBasis, mode: str, initial: str, rng: np.random.Generator
) -> npt.NDArray[np.complex128]:

    n = len(basis)
    if initial == "uniform":
        return np.eye(n, dtype=np.complex128) / n
    if mode == "classical-diagonal":
        return np.diag(rng.dirichlet(np.ones(n))).astype(np.complex128)
    w = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rho = w @ w.conj().T
    return rho / np.trace(rho).real


@log
def solve(
    hs: Sequence[PayoffOperator],
    mode: str = "operator-density",
    eps: float = 1e-3,
    max_iters: int = 10000,
    seed: int = 0,
    initial: Union[str, Profile] = "uniform",
) -> SolveReport:
    """
    Searches for an ε-Nash equilibrium by averaged best responses (fictitious play).

    At round t every player's best response to the current profile is computed; if no
    player can gain more than ``eps`` the search stops, otherwise every state moves
    toward its best response with weight 1/(t+1). When several strategies tie for the
    best response, the step goes toward their uniform mixture. The search also counts as
    converged when the profile left by the last round is within ``eps``.

    Parameters
    ----------
    hs : Sequence[PayoffOperator]
        The payoff operators of all players, in player order.
    mode : str, default="operator-density"
        "operator-density" or "classical-diagonal".
    eps : float, default=1e-3
        Target exploitability; must be positive.
    max_iters : int, default=10000
        Largest number of rounds. With 0 the initial profile is returned unconverged.
    seed : int, default=0
        Seed of the random starting profile.
    initial : str | Profile, default="uniform"
        "uniform" starts every player at the maximally mixed state, "random" at a seeded
        random state. A Profile is used as given.

    Returns
    -------
    SolveReport
        The final profile, its exploitability and payoffs, and the convergence history.
    """

    if not eps > 0:
        raise ValueError(f"{icons.red_dot} The target exploitability must be positive; got {eps!r}.")
    if mode not in MODES:
        raise ValueError(f"{icons.red_dot} Invalid mode '{mode}'. Valid options: {MODES}.")
    if max_iters < 0:
        raise ValueError(f"{icons.red_dot} The iteration budget must be non-negative; got {max_iters}.")
    if len(hs) == 0:
        raise ValueError(f"{icons.red_dot} No payoff operators given.")

    bases = hs[0].bases
    if isinstance(initial, Profile):
        if initial.mode != mode:
            raise ValueError(
                f"{icons.red_dot} The initial profile is in '{initial.mode}' mode; the solver runs in '{mode}' mode."
            )
        rhos: List[npt.NDArray[np.complex128]] = [np.array(s.rho) for s in initial.states]
    elif initial in INITIAL_PROFILES:
        rng = np.random.default_rng(seed)
        rhos = [_initial_rho(b, mode, initial, rng) for b in bases]
    else:
        raise ValueError(
            f"{icons.red_dot} Invalid initial profile '{initial}'. Valid options: {INITIAL_PROFILES}."
        )
    _check_operators(hs, Profile(tuple(StrategyDensity(b, r, validate=False) for b, r in zip(bases, rhos)), mode))

    history: List[float] = []
    converged = False
    iterations = 0
    for t in range(1, max_iters + 1):
        iterations = t
        rows = _regrets(hs, rhos, mode, spread=True)
        gap = max(value - payoff for payoff, value, _ in rows)
        history.append(gap)
        if gap <= eps:
            converged = True
            break
        w = 1.0 / (t + 1)
        rhos = [(1.0 - w) * rho + w * response for rho, (_, _, response) in zip(rhos, rows)]
        if t % 1000 == 0:
            logger.debug("Round %d: exploitability %.3e", t, gap)

    final = _regrets(hs, rhos, mode, spread=True)
    profile = Profile(
        tuple(StrategyDensity(b, rho, validate=False) for b, rho in zip(bases, rhos)), mode
    )
    gap = max(value - payoff for payoff, value, _ in final)
    if iterations > 0 and gap <= eps:
        converged = True
    logger.debug("Solver stopped after %d round(s): exploitability %.3e, converged %s", iterations, gap, converged)

    return SolveReport(
        profile=profile,
        exploitability=gap,
        payoffs=tuple(payoff for payoff, _, _ in final),
        iterations=iterations,
        converged=converged,
        eps=eps,
        history=tuple(history),
    )
