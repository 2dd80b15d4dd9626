from qgame_labs.payoff._payoff_operators import (
    PayoffOperator,
    joint_operations,
    build_payoff_operator,
    classical_payoff_operator,
    payoff_operators,
    list_payoff_entries,
)
from qgame_labs.payoff._joint_states import (
    JointStrategyState,
    joint_state,
    correlated_state,
    expected_payoff,
)
from qgame_labs.payoff._consistency import (
    ConsistencyReport,
    consistency_check,
)
from qgame_labs.payoff._reference import (
    list_reference_matrices,
    reference_document,
    reference_payoff_matrix,
)

__all__ = [
    "PayoffOperator",
    "joint_operations",
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
    "list_reference_matrices",
    "reference_document",
    "reference_payoff_matrix",
]
