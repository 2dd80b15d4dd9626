from qgame_labs.linalg._matrix import (
    ComplexMatrix,
    as_complex_matrix,
    identity,
    matmul,
    adjoint,
    kron,
    trace,
    max_abs_diff,
    expectation,
)
from qgame_labs.linalg._eigen import hermitian_eigensystem
from qgame_labs.linalg._predicates import (
    is_hermitian,
    is_density_matrix,
    is_unitary,
)

__all__ = [
    "ComplexMatrix",
    "as_complex_matrix",
    "identity",
    "matmul",
    "adjoint",
    "kron",
    "trace",
    "max_abs_diff",
    "expectation",
    "hermitian_eigensystem",
    "is_hermitian",
    "is_density_matrix",
    "is_unitary",
]
