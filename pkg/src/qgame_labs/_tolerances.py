DEFAULT_TOL = 1e-9
ORTHONORMAL_TOL = 1e-10
HERMITIAN_TOL = 1e-12
PAYOFF_RESIDUE_TOL = 1e-10
CONSISTENCY_TOL = 1e-10
CLASSICAL_OFF_DIAGONAL_TOL = 1e-12
RANK_TOL = 1e-10
JACOBI_REL_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
OPERATOR_HERMITIAN_TOL = 1e-10
EIGENSPACE_TOL = 1e-9
