import numpy as np
import pandas as pd
from dataclasses import dataclass
from typing import List, Sequence
import qgame_labs._icons as icons
from qgame_labs._helper_functions import format_joint_label, joint_profiles
from qgame_labs._log import log, logger
from qgame_labs._tolerances import CONSISTENCY_TOL
from qgame_labs.game import GameDefinition, PureProfile, manipulative_payoff
from qgame_labs.linalg import ComplexMatrix
from qgame_labs.opspace import pure_strategy_state, random_unitary_in_span
from qgame_labs.payoff._joint_states import expected_payoff, joint_state
from qgame_labs.payoff._payoff_operators import PayoffOperator, payoff_operators


@dataclass(frozen=True, eq=False)
class ConsistencyReport:
    """
    Outcome of comparing trace-formula payoffs with direct object evolution.
    """

    game_name: str
    trials: int
    seed: int
    tol: float
    max_deviation: float
    passed: bool
    details: pd.DataFrame

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def summary(self) -> str:
        icon = icons.green_dot if self.passed else icons.red_dot
        return (
            f"{icon} {self.status}: the '{self.game_name}' game, {len(self.details)} comparisons, "
            f"max deviation {self.max_deviation:.3e} (tolerance {self.tol:.1e})"
        )


def _compare(
    g: GameDefinition,
    hs: Sequence[PayoffOperator],
    strategies: Sequence[ComplexMatrix],
    trial: int,
    profile: str,
) -> List[dict]:

    states = [pure_strategy_state(s, p.basis) for s, p in zip(strategies, g.players)]
    joint = joint_state(states, g)
    direct = manipulative_payoff(g, PureProfile(tuple(strategies)))
    rows = []
    for k, (h, value) in enumerate(zip(hs, direct), start=1):
        traced = expected_payoff(joint, h)
        rows.append(
            {
                "Trial": trial,
                "Profile": profile,
                "Player": k,
                "Trace Payoff": traced,
                "Manipulative Payoff": value,
                "Deviation": abs(traced - value),
            }
        )
    return rows


@log
def consistency_check(
    g: GameDefinition,
    trials: int = 1000,
    seed: int = 0,
    tol: float = CONSISTENCY_TOL,
    include_basis_profiles: bool = True,
) -> ConsistencyReport:
    """
    Checks that the payoff operators reproduce the manipulative payoffs.

    Parameters
    ----------
    g : GameDefinition
        A valid game.
    trials : int, default=1000
        Number of random pure profiles. Each player draws a random unitary inside its
        strategy span.
    seed : int, default=0
        Seed of the random profiles.
    tol : float, default=1e-10
        Largest accepted deviation.
    include_basis_profiles : bool, default=True
        Also compares every profile made of basis elements, before the random trials.

    Returns
    -------
    ConsistencyReport
        PASS iff every deviation is within tolerance; the details table holds one row
        per profile and player.
    """

    if trials < 0:
        raise ValueError(f"{icons.red_dot} The number of trials must be non-negative; got {trials}.")

    hs = payoff_operators(g)
    rows: List[dict] = []
    if include_basis_profiles:
        for index in joint_profiles([len(b) for b in g.bases]):
            strategies = [p.basis[k] for p, k in zip(g.players, index)]
            label = format_joint_label([p.basis.labels[k] for p, k in zip(g.players, index)])
            rows.extend(_compare(g, hs, strategies, 0, label))

    rng = np.random.default_rng(seed)
    for trial in range(1, trials + 1):
        strategies = [random_unitary_in_span(p.basis, rng) for p in g.players]
        rows.extend(_compare(g, hs, strategies, trial, "random"))

    details = pd.DataFrame(
        rows,
        columns=["Trial", "Profile", "Player", "Trace Payoff", "Manipulative Payoff", "Deviation"],
    )
    max_deviation = float(details["Deviation"].max()) if len(details) else 0.0
    passed = max_deviation <= tol
    logger.debug("Consistency of '%s': %d comparisons, max deviation %.3e", g.name, len(details), max_deviation)

    return ConsistencyReport(
        game_name=g.name,
        trials=trials,
        seed=seed,
        tol=tol,
        max_deviation=max_deviation,
        passed=passed,
        details=details,
    )
