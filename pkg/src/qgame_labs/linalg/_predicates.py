import numpy as np
import numpy.typing as npt
from qgame_labs._tolerances import DEFAULT_TOL
from qgame_labs.linalg._eigen import hermitian_eigensystem
from qgame_labs.linalg._matrix import as_complex_matrix


def _coerce(a: npt.ArrayLike):

    try:
        return as_complex_matrix(a)
    except ValueError:
        return None


def is_hermitian(a: npt.ArrayLike, tol: float = DEFAULT_TOL) -> bool:

    m = _coerce(a)
    if m is None:
        return False
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def is_density_matrix(a: npt.ArrayLike, tol: float = DEFAULT_TOL) -> bool:
    """
    Checks whether a matrix is a valid density matrix.

    Parameters
    ----------
    a : numpy.typing.ArrayLike
        The candidate matrix.
    tol : float, default=1e-9
        Tolerance on Hermiticity, unit trace and the smallest eigenvalue.

    Returns
    -------
    bool
        True if the matrix is Hermitian, has trace 1 and no eigenvalue below -tol.
    """

    m = _coerce(a)
    if m is None or not is_hermitian(m, tol):
        return False
    if abs(complex(np.trace(m)) - 1.0) > tol:
        return False
    values, _ = hermitian_eigensystem(m, tol=tol)
    return bool(values[-1] >= -tol)


def is_unitary(a: npt.ArrayLike, tol: float = DEFAULT_TOL) -> bool:
    """
    Checks whether ‖a·a† − I‖_max is within tolerance.

    Parameters
    ----------
    a : numpy.typing.ArrayLike
        The candidate matrix.
    tol : float, default=1e-9
        Tolerance on the entrywise deviation from the identity.

    Returns
    -------
    bool
        True if the matrix is unitary within tolerance.
    """

    m = _coerce(a)
    if m is None:
        return False
    deviation = m @ m.conj().T - np.eye(m.shape[0])
    return bool(np.max(np.abs(deviation)) <= tol)
