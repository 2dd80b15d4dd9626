import numpy as np
import numpy.typing as npt
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence, Tuple
import qgame_labs._icons as icons
from qgame_labs._tolerances import HERMITIAN_TOL, ORTHONORMAL_TOL
from qgame_labs.linalg import ComplexMatrix, as_complex_matrix

BASIS_KINDS = ("classical", "quantum", "custom")


@dataclass(frozen=True, eq=False)
class OperatorBasis:
    """
    An ordered operator basis of a player's strategy space.

    Parameters
    ----------
    object_dim : int
        Dimension of the game object's state space.
    elements : Tuple[ComplexMatrix, ...]
        The basis operators, each object_dim × object_dim.
    kind : str
        One of "classical", "quantum" or "custom".
    labels : Tuple[str, ...]
        A printable label per element.
    """

    object_dim: int
    elements: Tuple[ComplexMatrix, ...]
    kind: str
    labels: Tuple[str, ...]

    def __post_init__(self):

        if self.kind not in BASIS_KINDS:
            raise ValueError(
                f"{icons.red_dot} Invalid basis kind '{self.kind}'. Valid options: {BASIS_KINDS}."
            )
        if len(self.elements) == 0:
            raise ValueError(f"{icons.red_dot} An operator basis needs at least one element.")
        if len(self.labels) != len(self.elements):
            raise ValueError(
                f"{icons.red_dot} The basis has {len(self.elements)} elements but {len(self.labels)} labels."
            )
        for label, element in zip(self.labels, self.elements):
            if element.shape != (self.object_dim, self.object_dim):
                raise ValueError(
                    f"{icons.red_dot} The basis element '{label}' has shape {element.shape}; expected {(self.object_dim, self.object_dim)}."
                )

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, index: int) -> ComplexMatrix:
        return self.elements[index]

    def __iter__(self) -> Iterator[ComplexMatrix]:
        return iter(self.elements)

    @cached_property
    def stack(self) -> npt.NDArray[np.complex128]:
        """
        The elements as one read-only (size, d, d) array.
        """
        s = np.stack(self.elements)
        s.setflags(write=False)
        return s

    def index(self, label: str) -> int:

        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(
                f"{icons.red_dot} The '{label}' element is not part of the basis {self.labels}."
            )

    def matches(self, other: "OperatorBasis", tol: float = HERMITIAN_TOL) -> bool:
        """
        True if both bases have the same elements in the same order.
        """
        if other is self:
            return True
        if other.object_dim != self.object_dim or len(other) != len(self):
            return False
        return bool(np.max(np.abs(other.stack - self.stack)) <= tol)


def inner(a: npt.ArrayLike, b: npt.ArrayLike) -> complex:
    """
    The operator inner product Tr(a†b) / d.

    Parameters
    ----------
    a : numpy.typing.ArrayLike
        Left operator (conjugated).
    b : numpy.typing.ArrayLike
        Right operator.

    Returns
    -------
    complex
        The normalized Hilbert-Schmidt overlap; 1 for any unitary with itself.
    """

    a = as_complex_matrix(a, "a")
    b = as_complex_matrix(b, "b")
    if a.shape != b.shape:
        raise ValueError(
            f"{icons.red_dot} Cannot take the inner product of operators of shapes {a.shape} and {b.shape}."
        )
    return complex(np.vdot(a, b)) / a.shape[0]


def gram_matrix(basis: OperatorBasis) -> npt.NDArray[np.complex128]:
    """
    Matrix of pairwise inner products of the basis elements.
    """

    flat = basis.stack.reshape(len(basis), -1)
    return (flat.conj() @ flat.T) / basis.object_dim


def verify_orthonormal(basis: OperatorBasis, tol: float = ORTHONORMAL_TOL) -> bool:
    """
    Checks that every element is unitary and that the elements are orthonormal.

    Parameters
    ----------
    basis : OperatorBasis
        The basis to check.
    tol : float, default=1e-10
        Entrywise tolerance.

    Returns
    -------
    bool
        True if the Gram matrix is the identity and all elements are unitary.
    """

    d = basis.object_dim
    for element in basis:
        if np.max(np.abs(element @ element.conj().T - np.eye(d))) > tol:
            return False
    return bool(np.max(np.abs(gram_matrix(basis) - np.eye(len(basis)))) <= tol)


def make_basis(
    elements: Sequence[npt.ArrayLike],
    kind: str = "custom",
    labels: Optional[Sequence[str]] = None,
    validate: bool = True,
    tol: float = ORTHONORMAL_TOL,
) -> OperatorBasis:
    """
    Builds an operator basis from explicit matrices.

    Parameters
    ----------
    elements : Sequence[numpy.typing.ArrayLike]
        The basis operators.
    kind : str, default="custom"
        One of "classical", "quantum" or "custom".
    labels : Sequence[str], default=None
        Element labels. Defaults to "B0", "B1", ...
    validate : bool, default=True
        If True, non-unitary or non-orthonormal elements raise an error.
    tol : float, default=1e-10
        Tolerance of the orthonormality check.

    Returns
    -------
    OperatorBasis
        The basis.
    """

    matrices = tuple(
        as_complex_matrix(e, f"basis element {k}") for k, e in enumerate(elements)
    )
    if len(matrices) == 0:
        raise ValueError(f"{icons.red_dot} An operator basis needs at least one element.")
    if labels is None:
        labels = [f"B{k}" for k in range(len(matrices))]
    basis = OperatorBasis(
        object_dim=matrices[0].shape[0],
        elements=matrices,
        kind=kind,
        labels=tuple(labels),
    )
    if validate and not verify_orthonormal(basis, tol):
        raise ValueError(
            f"{icons.red_dot} The operator basis {basis.labels} is not made of orthonormal unitaries."
        )
    return basis


def shift_matrix(d: int) -> ComplexMatrix:
    """
    The cyclic shift |k> -> |k+1 mod d>.
    """

    return as_complex_matrix(np.roll(np.eye(d), 1, axis=0))


def clock_matrix(d: int) -> ComplexMatrix:
    """
    The clock diag(1, ω, ω², ...) with ω = exp(2πi/d).
    """

    return as_complex_matrix(np.diag(np.exp(2j * np.pi * np.arange(d) / d)))


_PAULI = (
    ("I", [[1, 0], [0, 1]]),
    ("X", [[0, 1], [1, 0]]),
    ("Y", [[0, -1j], [1j, 0]]),
    ("Z", [[1, 0], [0, -1]]),
)


def pauli_basis() -> OperatorBasis:
    """
    The Pauli basis (I, X, Y, Z) of 2 × 2 operators, in that order.

    Returns
    -------
    OperatorBasis
        A quantum basis of four elements.
    """

    return OperatorBasis(
        object_dim=2,
        elements=tuple(as_complex_matrix(m, label) for label, m in _PAULI),
        kind="quantum",
        labels=tuple(label for label, _ in _PAULI),
    )


def classical_basis(d: int) -> OperatorBasis:
    """
    The permutation basis of a classical d-state object.

    For d = 2 this is (I, X). For d > 2 it is the d cyclic shifts (I, S, S², ...).

    Parameters
    ----------
    d : int
        Number of object configurations.

    Returns
    -------
    OperatorBasis
        A classical basis of d elements.
    """

    if not isinstance(d, (int, np.integer)) or d < 2:
        raise ValueError(f"{icons.red_dot} A classical basis needs d >= 2; got {d!r}.")

    shift = shift_matrix(d)
    elements = tuple(
        as_complex_matrix(np.linalg.matrix_power(shift, k)) for k in range(d)
    )
    if d == 2:
        labels: Tuple[str, ...] = ("I", "X")
    else:
        labels = ("I", "S") + tuple(f"S^{k}" for k in range(2, d))
    return OperatorBasis(object_dim=d, elements=elements, kind="classical", labels=labels)


def heisenberg_weyl_basis(d: int) -> OperatorBasis:
    """
    The d² clock-shift products X^a Z^b, ordered with a major.

    Parameters
    ----------
    d : int
        Object dimension, at least 2.

    Returns
    -------
    OperatorBasis
        A quantum basis of d² unitary elements.
    """

    if not isinstance(d, (int, np.integer)) or d < 2:
        raise ValueError(f"{icons.red_dot} A Heisenberg-Weyl basis needs d >= 2; got {d!r}.")

    shift = shift_matrix(d)
    clock = clock_matrix(d)
    elements = []
    labels = []
    for a in range(d):
        for b in range(d):
            elements.append(
                as_complex_matrix(
                    np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(clock, b)
                )
            )
            labels.append("I" if a == 0 and b == 0 else f"X^{a}Z^{b}")
    return OperatorBasis(
        object_dim=d, elements=tuple(elements), kind="quantum", labels=tuple(labels)
    )


def quantum_basis(d: int) -> OperatorBasis:
    """
    The full operator basis of a d-level object: Pauli for d = 2, Heisenberg-Weyl otherwise.
    """

    if isinstance(d, (int, np.integer)) and d == 2:
        return pauli_basis()
    return heisenberg_weyl_basis(d)
