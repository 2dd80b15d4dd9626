import numpy as np
import numpy.typing as npt
from typing import Any, Dict, List, Optional, Sequence
import qgame_labs._icons as icons
from qgame_labs.linalg import ComplexMatrix, as_complex_matrix


class GameFileError(ValueError):
    """
    A game, profile or matrix document that cannot be parsed.

    Parameters
    ----------
    message : str
        What is wrong.
    location : str, default="$"
        JSONPath of the offending field.
    """

    def __init__(self, message: str, location: str = "$"):
        self.location = location
        super().__init__(f"{icons.red_dot} {location}: {message}")


def encode_complex(z: complex) -> List[float]:

    z = complex(z)
    return [float(z.real), float(z.imag)]


def decode_complex(value: Any, location: str = "$") -> complex:
    """
    Reads a scalar encoded as a JSON number or as a [re, im] pair.

    Parameters
    ----------
    value : Any
        The decoded JSON value.
    location : str, default="$"
        JSONPath used in error messages.

    Returns
    -------
    complex
        The scalar.
    """

    if isinstance(value, bool):
        raise GameFileError(f"expected a number or a [re, im] pair, got {value!r}", location)
    if isinstance(value, (int, float)):
        z = complex(value)
    elif (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        z = complex(value[0], value[1])
    else:
        raise GameFileError(f"expected a number or a [re, im] pair, got {value!r}", location)
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise GameFileError(f"non-finite value {value!r}", location)
    return z


def encode_matrix(m: npt.ArrayLike) -> List[List[List[float]]]:
    """
    Row-major nested lists with every entry written as a [re, im] pair.
    """

    m = np.asarray(m, dtype=np.complex128)
    return [[encode_complex(z) for z in row] for row in m]


def decode_matrix(value: Any, location: str = "$") -> ComplexMatrix:
    """
    Reads a square matrix from nested row lists or from a {"dim", "matrix"} document.

    Parameters
    ----------
    value : Any
        The decoded JSON value.
    location : str, default="$"
        JSONPath used in error messages.

    Returns
    -------
    ComplexMatrix
        The matrix.
    """

    dim: Optional[int] = None
    if isinstance(value, dict):
        if "matrix" not in value:
            raise GameFileError("missing 'matrix' field", location)
        dim = value.get("dim")
        if dim is not None and (isinstance(dim, bool) or not isinstance(dim, int) or dim < 1):
            raise GameFileError(f"'dim' must be a positive integer, got {dim!r}", f"{location}.dim")
        location = f"{location}.matrix"
        value = value["matrix"]

    if not isinstance(value, list) or len(value) == 0:
        raise GameFileError("expected a non-empty list of matrix rows", location)
    n = len(value)
    if dim is not None and dim != n:
        raise GameFileError(f"'dim' is {dim} but the matrix has {n} rows", location)
    rows = []
    for r, row in enumerate(value):
        if not isinstance(row, list) or len(row) != n:
            raise GameFileError(f"row {r} must be a list of {n} entries", f"{location}[{r}]")
        rows.append([decode_complex(v, f"{location}[{r}][{c}]") for c, v in enumerate(row)])
    return as_complex_matrix(rows)


def matrix_document(
    m: npt.ArrayLike, labels: Optional[Sequence[str]] = None, **header: Any
) -> Dict[str, Any]:
    """
    A self-describing matrix document with an explicit dimension header.
    """

    m = np.asarray(m, dtype=np.complex128)
    document: Dict[str, Any] = dict(header)
    document["dim"] = int(m.shape[0])
    if labels is not None:
        document["labels"] = list(labels)
    document["matrix"] = encode_matrix(m)
    return document
