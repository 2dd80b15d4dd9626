import itertools
import numpy as np
from typing import Iterator, List, Optional, Sequence, Tuple, Union
import qgame_labs._icons as icons
from qgame_labs._tolerances import DEFAULT_TOL


def joint_profiles(sizes: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """
    Enumerates joint basis indices with player 1 varying slowest.

    Parameters
    ----------
    sizes : Sequence[int]
        Basis size of each player, in player order.

    Returns
    -------
    Iterator[Tuple[int, ...]]
        One tuple of per-player indices per joint basis element.
    """

    return itertools.product(*(range(s) for s in sizes))


def format_joint_label(labels: Sequence[str]) -> str:
    """
    Joins per-player basis labels into one joint label.

    Single-character labels are concatenated ("XY"); longer labels are joined with ".".

    Parameters
    ----------
    labels : Sequence[str]
        One basis label per player.

    Returns
    -------
    str
        The joint label.
    """

    if all(len(label) == 1 for label in labels):
        return "".join(labels)
    return ".".join(labels)


def joint_labels(label_sets: Sequence[Sequence[str]]) -> List[str]:
    """
    Labels of the joint basis in player-1-major order.

    Parameters
    ----------
    label_sets : Sequence[Sequence[str]]
        The basis labels of every player.

    Returns
    -------
    List[str]
        One label per joint basis element.
    """

    return [
        format_joint_label([label_sets[p][k] for p, k in enumerate(index)])
        for index in joint_profiles([len(s) for s in label_sets])
    ]


def check_player_index(i: int, n_players: int):

    if not isinstance(i, (int, np.integer)) or isinstance(i, bool):
        raise ValueError(
            f"{icons.red_dot} The player index must be an integer; got {i!r}."
        )
    if not 0 <= i < n_players:
        raise ValueError(
            f"{icons.red_dot} The player index {i} is out of range for a game with {n_players} player(s)."
        )


def validate_pdf(
    pdf: Sequence[float], size: int, tol: float = DEFAULT_TOL
) -> np.ndarray:
    """
    Checks a probability distribution over a basis and returns it as a float array.

    Parameters
    ----------
    pdf : Sequence[float]
        The probability of each basis element.
    size : int
        The expected number of entries.
    tol : float, default=1e-9
        Tolerance of the normalization check.

    Returns
    -------
    numpy.ndarray
        The weights as a 1-D float array.
    """

    weights = np.asarray(pdf, dtype=float)
    if weights.ndim != 1 or len(weights) != size:
        raise ValueError(
            f"{icons.red_dot} The probability distribution must have {size} entries; got shape {weights.shape}."
        )
    if not np.all(np.isfinite(weights)):
        raise ValueError(
            f"{icons.red_dot} The probability distribution contains non-finite values."
        )
    if np.any(weights < 0):
        raise ValueError(
            f"{icons.red_dot} The probability distribution has negative weights: {weights.tolist()}."
        )
    if abs(weights.sum() - 1.0) > tol:
        raise ValueError(
            f"{icons.red_dot} The probability distribution sums to {weights.sum()!r}, not 1."
        )
    return weights


def resolve_rng(
    seed: Optional[Union[int, np.random.Generator]] = None
) -> np.random.Generator:
    """
    Returns a numpy random generator for a seed, or the generator itself.
    """

    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)
