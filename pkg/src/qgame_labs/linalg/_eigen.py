import math
import numpy as np
import numpy.typing as npt
from typing import Tuple
import qgame_labs._icons as icons
from qgame_labs._log import logger
from qgame_labs._tolerances import DEFAULT_TOL, JACOBI_MAX_SWEEPS, JACOBI_REL_TOL
from qgame_labs.linalg._matrix import ComplexMatrix, as_complex_matrix


def _off_diagonal_norm(a: np.ndarray) -> float:

    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int):
    """
    Applies one complex Jacobi rotation that annihilates a[p, q] in place.
    """

    apq = a[p, q]
    magnitude = abs(apq)
    if magnitude == 0.0:
        return

    # Unit phase first makes the pivot real, then a real rotation zeros it.
    phase = np.conj(apq / magnitude)
    theta = 0.5 * math.atan2(2.0 * magnitude, a[q, q].real - a[p, p].real)
    c, s = math.cos(theta), math.sin(theta)
    j = np.array([[c, s], [-s * phase, c * phase]], dtype=np.complex128)

    a[:, [p, q]] = a[:, [p, q]] @ j
    a[[p, q], :] = j.conj().T @ a[[p, q], :]
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, [p, q]] = v[:, [p, q]] @ j


def hermitian_eigensystem(
    a: npt.ArrayLike,
    tol: float = DEFAULT_TOL,
    rel_tol: float = JACOBI_REL_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> Tuple[npt.NDArray[np.float64], ComplexMatrix]:
    """
    Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Parameters
    ----------
    a : numpy.typing.ArrayLike
        The matrix. It must be Hermitian within ``tol``.
    tol : float, default=1e-9
        Hermiticity tolerance on the input.
    rel_tol : float, default=1e-13
        Sweeps stop once the off-diagonal Frobenius norm is at most ``rel_tol`` times
        the Frobenius norm of the input.
    max_sweeps : int, default=100
        Upper bound on the number of cyclic sweeps.

    Returns
    -------
    Tuple[numpy.ndarray, ComplexMatrix]
        Eigenvalues sorted in descending order and the matching orthonormal eigenvectors
        as columns. Equal eigenvalues keep the order in which the sweeps left them.
    """

    a = as_complex_matrix(a, "a")
    residual = float(np.max(np.abs(a - a.conj().T)))
    if residual > tol:
        raise ValueError(
            f"{icons.red_dot} The matrix is not Hermitian (residual {residual:.3e} exceeds {tol:.1e})."
        )

    n = a.shape[0]
    work = np.array((a + a.conj().T) / 2.0, dtype=np.complex128)
    vectors = np.eye(n, dtype=np.complex128)
    threshold = rel_tol * float(np.linalg.norm(work))

    sweeps = 0
    while _off_diagonal_norm(work) > threshold:
        if sweeps == max_sweeps:
            logger.warning(
                "Jacobi eigensolver stopped after %d sweeps with off-diagonal norm %.3e",
                sweeps,
                _off_diagonal_norm(work),
            )
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(work, vectors, p, q)
        sweeps += 1

    values = np.diag(work).real.copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = np.ascontiguousarray(vectors[:, order])
    values.setflags(write=False)
    vectors.setflags(write=False)
    return values, vectors
