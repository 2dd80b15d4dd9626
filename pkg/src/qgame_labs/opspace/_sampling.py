import numpy as np
from typing import Optional, Union
from qgame_labs._helper_functions import resolve_rng
from qgame_labs.linalg import ComplexMatrix, as_complex_matrix
from qgame_labs.opspace._bases import OperatorBasis
from qgame_labs.opspace._decomposition import UnitaryParams, unitary_from_params

Seed = Optional[Union[int, np.random.Generator]]


def random_unitary_params(seed: Seed = None) -> UnitaryParams:
    """
    Angles drawn uniformly from [0, 4π), covering the half-angle double cover.
    """

    rng = resolve_rng(seed)
    alpha, beta, gamma, delta = rng.uniform(0.0, 4.0 * np.pi, size=4)
    return UnitaryParams(float(alpha), float(beta), float(gamma), float(delta))


def random_unitary(d: int, seed: Seed = None) -> ComplexMatrix:
    """
    A Haar-random d × d unitary.

    Parameters
    ----------
    d : int
        Dimension.
    seed : int | numpy.random.Generator, default=None
        Seed or generator.

    Returns
    -------
    ComplexMatrix
        Q from the QR decomposition of a complex Ginibre matrix, with the phases of
        R's diagonal folded back in.
    """

    rng = resolve_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return as_complex_matrix(q * phases)


def random_unitary_in_span(basis: OperatorBasis, seed: Seed = None) -> ComplexMatrix:
    """
    A random unitary restricted to the span of an operator basis.

    Parameters
    ----------
    basis : OperatorBasis
        The strategy basis.
    seed : int | numpy.random.Generator, default=None
        Seed or generator.

    Returns
    -------
    ComplexMatrix
        For quantum bases, a unitary over the full operator space (parametrized for
        d = 2, Haar for d > 2). For classical bases, a circulant unitary, which is a
        combination of cyclic shifts. For custom bases, one random element times a
        random phase.
    """

    rng = resolve_rng(seed)
    d = basis.object_dim
    if basis.kind == "quantum" and len(basis) == d * d:
        if d == 2:
            return unitary_from_params(random_unitary_params(rng))
        return random_unitary(d, rng)
    if basis.kind == "classical":
        k = np.arange(d)
        fourier = np.exp(2j * np.pi * np.outer(k, k) / d) / np.sqrt(d)
        phases = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=d))
        return as_complex_matrix((fourier * phases) @ fourier.conj().T)
    element = basis[int(rng.integers(len(basis)))]
    return as_complex_matrix(np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)) * element)
