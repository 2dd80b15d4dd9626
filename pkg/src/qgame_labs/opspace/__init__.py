from qgame_labs.opspace._bases import (
    BASIS_KINDS,
    OperatorBasis,
    inner,
    gram_matrix,
    verify_orthonormal,
    make_basis,
    shift_matrix,
    clock_matrix,
    pauli_basis,
    classical_basis,
    heisenberg_weyl_basis,
    quantum_basis,
)
from qgame_labs.opspace._decomposition import (
    CoefficientVector,
    UnitaryParams,
    decompose,
    reconstruct,
    unitary_from_params,
)
from qgame_labs.opspace._strategy_states import (
    StrategyDensity,
    strategy_from_coefficients,
    pure_strategy_state,
    classical_mixture_state,
    maximally_mixed_state,
)
from qgame_labs.opspace._sampling import (
    random_unitary_params,
    random_unitary,
    random_unitary_in_span,
)

__all__ = [
    "BASIS_KINDS",
    "OperatorBasis",
    "inner",
    "gram_matrix",
    "verify_orthonormal",
    "make_basis",
    "shift_matrix",
    "clock_matrix",
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
    "random_unitary_params",
    "random_unitary",
    "random_unitary_in_span",
]
