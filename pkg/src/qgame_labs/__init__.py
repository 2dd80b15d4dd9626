from qgame_labs._log import configure_logging
from qgame_labs._serialization import GameFileError
from qgame_labs.linalg import (
    hermitian_eigensystem,
    is_hermitian,
    is_density_matrix,
    is_unitary,
)
from qgame_labs.opspace import (
    OperatorBasis,
    make_basis,
    pauli_basis,
    classical_basis,
    heisenberg_weyl_basis,
    quantum_basis,
    CoefficientVector,
    UnitaryParams,
    decompose,
    reconstruct,
    unitary_from_params,
    StrategyDensity,
    strategy_from_coefficients,
    pure_strategy_state,
    classical_mixture_state,
    maximally_mixed_state,
    random_unitary,
    random_unitary_in_span,
)
from qgame_labs.game import (
    PlayerSpec,
    GameDefinition,
    PureProfile,
    validate_game,
    check_game,
    list_players,
    manipulative_payoff,
    ClassicalTableGame,
    classical_game_from_table,
    make_pfg,
    make_sfg,
    make_pfg_table,
    make_demo,
    print_game_tree,
)
from qgame_labs.payoff import (
    PayoffOperator,
    build_payoff_operator,
    classical_payoff_operator,
    payoff_operators,
    list_payoff_entries,
    JointStrategyState,
    joint_state,
    correlated_state,
    expected_payoff,
    ConsistencyReport,
    consistency_check,
    reference_payoff_matrix,
)
from qgame_labs.equilibrium import (
    Profile,
    BestResponse,
    effective_payoff_operator,
    best_response,
    player_regrets,
    exploitability,
    SolveReport,
    solve,
    RealizabilityReport,
    unitary_realizability,
)

__version__ = "0.1.0"

__all__ = [
    "configure_logging",
    "GameFileError",
    "hermitian_eigensystem",
    "is_hermitian",
    "is_density_matrix",
    "is_unitary",
    "OperatorBasis",
    "make_basis",
    "pauli_basis",
    "classical_basis",
    "heisenberg_weyl_basis",
    "quantum_basis",
    "CoefficientVector",
    "UnitaryParams",
    "decompose",
    "reconstruct",
    "unitary_from_params",
    "StrategyDensity",
    "strategy_from_coefficients",
    "pure_strategy_state",
    "classical_mixture_state",
    "maximally_mixed_state",
    "random_unitary",
    "random_unitary_in_span",
    "PlayerSpec",
    "GameDefinition",
    "PureProfile",
    "validate_game",
    "check_game",
    "list_players",
    "manipulative_payoff",
    "ClassicalTableGame",
    "classical_game_from_table",
    "make_pfg",
    "make_sfg",
    "make_pfg_table",
    "make_demo",
    "print_game_tree",
    "PayoffOperator",
    "build_payoff_operator",
    "classical_payoff_operator",
    "payoff_operators",
    "list_payoff_entries",
    "JointStrategyState",
    "joint_state",
    "correlated_state",
    "expected_payoff",
    "ConsistencyReport",
    "consistency_check",
    "reference_payoff_matrix",
    "Profile",
    "BestResponse",
    "effective_payoff_operator",
    "best_response",
    "player_regrets",
    "exploitability",
    "SolveReport",
    "solve",
    "RealizabilityReport",
    "unitary_realizability",
]
