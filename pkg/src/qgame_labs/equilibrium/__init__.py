from qgame_labs.equilibrium._best_response import (
    MODES,
    Profile,
    BestResponse,
    effective_payoff_operator,
    best_response,
    player_regrets,
    exploitability,
)
from qgame_labs.equilibrium._solver import (
    INITIAL_PROFILES,
    SolveReport,
    solve,
)
from qgame_labs.equilibrium._realizability import (
    REALIZABLE,
    NOT_REALIZABLE,
    MIXED,
    RealizabilityReport,
    unitary_realizability,
)

__all__ = [
    "MODES",
    "Profile",
    "BestResponse",
    "effective_payoff_operator",
    "best_response",
    "player_regrets",
    "exploitability",
    "INITIAL_PROFILES",
    "SolveReport",
    "solve",
    "REALIZABLE",
    "NOT_REALIZABLE",
    "MIXED",
    "RealizabilityReport",
    "unitary_realizability",
]
