import json
from importlib import resources
from typing import Any, Dict, List
import qgame_labs._icons as icons
from qgame_labs._serialization import decode_matrix
from qgame_labs.linalg import ComplexMatrix


def list_reference_matrices() -> List[str]:
    """
    Names of the matrix fixtures shipped with the package.
    """

    folder = resources.files("qgame_labs.fixtures")
    return sorted(
        entry.name[: -len(".json")]
        for entry in folder.iterdir()
        if entry.name.endswith(".json")
    )


def reference_document(name: str) -> Dict[str, Any]:
    """
    Loads a shipped matrix fixture, including its provenance note.

    Parameters
    ----------
    name : str
        Fixture name, without the ".json" suffix.

    Returns
    -------
    Dict[str, Any]
        The decoded JSON document.
    """

    if name not in list_reference_matrices():
        raise ValueError(
            f"{icons.red_dot} Invalid reference matrix '{name}'. Valid options: {list_reference_matrices()}."
        )
    text = resources.files("qgame_labs.fixtures").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def reference_payoff_matrix(name: str) -> ComplexMatrix:
    """
    The matrix stored in a shipped fixture.
    """

    return decode_matrix(reference_document(name), name)
