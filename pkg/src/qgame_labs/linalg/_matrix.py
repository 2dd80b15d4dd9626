import numpy as np
import numpy.typing as npt
import qgame_labs._icons as icons
from qgame_labs._tolerances import PAYOFF_RESIDUE_TOL

ComplexMatrix = npt.NDArray[np.complex128]


def _frozen(a: np.ndarray) -> ComplexMatrix:

    a.setflags(write=False)
    return a


def as_complex_matrix(a: npt.ArrayLike, name: str = "matrix") -> ComplexMatrix:
    """
    Coerces nested sequences or arrays to a read-only square complex128 matrix.

    Parameters
    ----------
    a : numpy.typing.ArrayLike
        The matrix entries, row-major.
    name : str, default="matrix"
        Name used in error messages.

    Returns
    -------
    ComplexMatrix
        A new, read-only copy of the matrix.
    """

    try:
        m = np.array(a, dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise ValueError(f"{icons.red_dot} The '{name}' is not a numeric matrix: {e}")
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError(
            f"{icons.red_dot} The '{name}' must be a non-empty square matrix; got shape {m.shape}."
        )
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{icons.red_dot} The '{name}' contains non-finite entries.")
    return _frozen(m)


def identity(d: int) -> ComplexMatrix:
    """
    The d × d identity matrix.
    """

    if d < 1:
        raise ValueError(f"{icons.red_dot} The dimension must be positive; got {d}.")
    return _frozen(np.eye(d, dtype=np.complex128))


def _same_dim(a: ComplexMatrix, b: ComplexMatrix, operation: str):

    if a.shape != b.shape:
        raise ValueError(
            f"{icons.red_dot} Cannot {operation} matrices of shapes {a.shape} and {b.shape}."
        )


def matmul(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    """
    Matrix product a·b of two square matrices of the same dimension.

    Parameters
    ----------
    a : numpy.typing.ArrayLike
        Left factor.
    b : numpy.typing.ArrayLike
        Right factor.

    Returns
    -------
    ComplexMatrix
        The product.
    """

    a = as_complex_matrix(a, "a")
    b = as_complex_matrix(b, "b")
    _same_dim(a, b, "multiply")
    return _frozen(a @ b)


def adjoint(a: npt.ArrayLike) -> ComplexMatrix:
    """
    Conjugate transpose.
    """

    a = as_complex_matrix(a, "a")
    return _frozen(np.ascontiguousarray(a.conj().T))


def kron(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    """
    Kronecker product with the first factor's index major.

    Parameters
    ----------
    a : numpy.typing.ArrayLike
        First factor (slowest varying joint index).
    b : numpy.typing.ArrayLike
        Second factor.

    Returns
    -------
    ComplexMatrix
        The product, of dimension dim(a)·dim(b).
    """

    a = as_complex_matrix(a, "a")
    b = as_complex_matrix(b, "b")
    return _frozen(np.kron(a, b))


def trace(a: npt.ArrayLike) -> complex:

    a = as_complex_matrix(a, "a")
    return complex(np.trace(a))


def max_abs_diff(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """
    Largest absolute entrywise difference between two matrices of equal shape.
    """

    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ValueError(
            f"{icons.red_dot} Cannot compare matrices of shapes {a.shape} and {b.shape}."
        )
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def expectation(
    observable: npt.ArrayLike,
    rho: npt.ArrayLike,
    residue_tol: float = PAYOFF_RESIDUE_TOL,
) -> float:
    """
    Reads an observable out of a state: the real part of tr(observable·rho).

    Parameters
    ----------
    observable : numpy.typing.ArrayLike
        A Hermitian operator.
    rho : numpy.typing.ArrayLike
        A density matrix of the same dimension.
    residue_tol : float, default=1e-10
        Largest imaginary part tolerated in the trace.

    Returns
    -------
    float
        The expectation value.
    """

    observable = as_complex_matrix(observable, "observable")
    rho = as_complex_matrix(rho, "rho")
    _same_dim(observable, rho, "contract")
    value = complex(np.einsum("ij,ji->", observable, rho))
    if abs(value.imag) > residue_tol:
        raise ValueError(
            f"{icons.red_dot} The expectation value has an imaginary residue of {value.imag!r}."
        )
    return value.real
