import json
from jsonpath_ng import parse
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union
import qgame_labs._icons as icons
from qgame_labs._serialization import GameFileError, decode_complex, decode_matrix, encode_matrix
from qgame_labs.game import GameDefinition, PlayerSpec
from qgame_labs.opspace import (
    OperatorBasis,
    StrategyDensity,
    UnitaryParams,
    classical_basis,
    classical_mixture_state,
    make_basis,
    pauli_basis,
    pure_strategy_state,
    quantum_basis,
    unitary_from_params,
)

NAMED_BASES = ("pauli", "classical", "quantum")
PROFILE_ENTRY_KINDS = ("unitary", "params", "pdf", "density")

PathLike = Union[str, Path]


def _location(match) -> str:

    path = str(match.full_path)
    return path if path.startswith("$") else f"$.{path}"


def _find_all(document: Any, expression: str) -> List[Tuple[Any, str]]:
    """
    Values and locations of every match of a JSONPath expression.
    """

    return [(m.value, _location(m)) for m in parse(expression).find(document)]


def _find(document: Any, expression: str, location: str = "$", required: bool = True) -> Tuple[Any, str]:

    matches = _find_all(document, expression)
    if not matches:
        if required:
            raise GameFileError(f"missing required field '{expression}'", location)
        return None, f"{location}.{expression}"
    value, found = matches[0]
    if location != "$":
        found = f"{location}.{found[2:]}"
    return value, found


def read_document(path: PathLike) -> Any:
    """
    Reads a JSON document, turning I/O and syntax problems into GameFileError.
    """

    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GameFileError(f"cannot read '{path}': {e.strerror or e}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise GameFileError(f"invalid JSON in '{path}' at line {e.lineno}, column {e.colno}: {e.msg}")


def write_document(document: Any, path: PathLike):

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")


def _positive_int(value: Any, location: str) -> int:

    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise GameFileError(f"expected a positive integer, got {value!r}", location)
    return value


def _decode_basis(player: Dict[str, Any], object_dim: int, location: str) -> OperatorBasis:

    value, where = _find(player, "basis", location)
    if isinstance(value, str):
        if value not in NAMED_BASES:
            raise GameFileError(f"unknown basis '{value}'; valid options: {NAMED_BASES}", where)
        try:
            if value == "pauli":
                return pauli_basis()
            if value == "classical":
                return classical_basis(object_dim)
            return quantum_basis(object_dim)
        except ValueError as e:
            raise GameFileError(str(e).replace(f"{icons.red_dot} ", ""), where)

    if not isinstance(value, list) or len(value) == 0:
        raise GameFileError(f"a basis is one of {NAMED_BASES} or a non-empty list of matrices", where)
    elements = [decode_matrix(m, f"{where}[{k}]") for k, m in enumerate(value)]
    labels, labels_where = _find(player, "labels", location, required=False)
    if labels is not None and (
        not isinstance(labels, list)
        or len(labels) != len(elements)
        or not all(isinstance(label, str) for label in labels)
    ):
        raise GameFileError(f"expected {len(elements)} string labels", labels_where)
    try:
        return make_basis(elements, kind="custom", labels=labels, validate=False)
    except ValueError as e:
        raise GameFileError(str(e).replace(f"{icons.red_dot} ", ""), where)


def parse_game_document(document: Any) -> GameDefinition:
    """
    Converts a decoded game document into a game definition.

    The result is not validated; use :func:`qgame_labs.game.validate_game`.

    Parameters
    ----------
    document : Any
        The decoded JSON value.

    Returns
    -------
    GameDefinition
        The game.
    """

    if not isinstance(document, dict):
        raise GameFileError("a game file must hold a JSON object")

    object_dim = _positive_int(*_find(document, "object_dim"))
    initial_state = decode_matrix(*_find(document, "initial_state"))
    name, name_where = _find(document, "name", required=False)
    if name is not None and not isinstance(name, str):
        raise GameFileError(f"expected a string, got {name!r}", name_where)

    players_value, players_where = _find(document, "players")
    if not isinstance(players_value, list) or len(players_value) == 0:
        raise GameFileError("expected a non-empty list of players", players_where)

    players = []
    for player, where in _find_all(document, "players[*]"):
        if not isinstance(player, dict):
            raise GameFileError("a player must be a JSON object", where)
        player_name, player_name_where = _find(player, "name", where, required=False)
        if player_name is None:
            player_name = f"player {len(players) + 1}"
        elif not isinstance(player_name, str):
            raise GameFileError(f"expected a string, got {player_name!r}", player_name_where)
        basis = _decode_basis(player, object_dim, where)
        scale = decode_matrix(*_find(player, "scale", where))
        players.append(PlayerSpec(player_name, basis, scale))

    return GameDefinition(
        object_dim=object_dim,
        initial_state=initial_state,
        players=tuple(players),
        name=name if name is not None else "custom",
    )


def load_game_file(path: PathLike) -> GameDefinition:
    """
    Reads a game file.

    Parameters
    ----------
    path : str | pathlib.Path
        Path of the JSON game file.

    Returns
    -------
    GameDefinition
        The game, not yet validated.
    """

    return parse_game_document(read_document(path))


def _encode_basis(basis: OperatorBasis) -> Union[str, List[Any]]:

    d = basis.object_dim
    if basis.matches(pauli_basis()):
        return "pauli"
    if d >= 2 and basis.matches(classical_basis(d)):
        return "classical"
    if d >= 2 and basis.matches(quantum_basis(d)):
        return "quantum"
    return [encode_matrix(e) for e in basis]


def game_document(g: GameDefinition) -> Dict[str, Any]:
    """
    The JSON-ready document of a game definition.
    """

    players = []
    for p in g.players:
        entry: Dict[str, Any] = {"name": p.name, "basis": _encode_basis(p.basis)}
        if isinstance(entry["basis"], list):
            entry["labels"] = list(p.basis.labels)
        entry["scale"] = encode_matrix(p.scale)
        players.append(entry)
    return {
        "name": g.name,
        "object_dim": g.object_dim,
        "initial_state": encode_matrix(g.initial_state),
        "players": players,
    }


def save_game_file(g: GameDefinition, path: PathLike):

    write_document(game_document(g), path)


def _decode_reals(value: Any, location: str, length: Optional[int] = None) -> List[float]:

    if not isinstance(value, list) or (length is not None and len(value) != length):
        size = f"{length} " if length is not None else ""
        raise GameFileError(f"expected a list of {size}real numbers", location)
    reals = []
    for k, v in enumerate(value):
        z = decode_complex(v, f"{location}[{k}]")
        if z.imag != 0.0:
            raise GameFileError("expected a real number", f"{location}[{k}]")
        reals.append(z.real)
    return reals


def parse_profile_document(document: Any, g: GameDefinition) -> List[StrategyDensity]:
    """
    Converts a decoded profile document into one strategy state per player.

    Malformed documents raise GameFileError; well-formed entries that do not fit the
    player's strategy space raise ValueError.

    Parameters
    ----------
    document : Any
        Either a list of entries or an object with a "players" list.
    g : GameDefinition
        The game the profile is for.

    Returns
    -------
    List[StrategyDensity]
        The strategy states, in player order.
    """

    expression = "players[*]" if isinstance(document, dict) else "$[*]"
    if isinstance(document, dict) and "players" not in document:
        raise GameFileError("missing required field 'players'")
    if not isinstance(document, (dict, list)):
        raise GameFileError("a profile file must hold a list of entries or an object with 'players'")
    entries = _find_all(document, expression)
    if len(entries) != g.n_players:
        raise ValueError(
            f"{icons.red_dot} The profile has {len(entries)} entries; the '{g.name}' game has {g.n_players} players."
        )

    states = []
    for (entry, where), player in zip(entries, g.players):
        if not isinstance(entry, dict):
            raise GameFileError("a profile entry must be a JSON object", where)
        kinds = [k for k in PROFILE_ENTRY_KINDS if k in entry]
        if len(kinds) != 1:
            raise GameFileError(f"a profile entry needs exactly one of {PROFILE_ENTRY_KINDS}", where)
        kind = kinds[0]
        value, value_where = _find(entry, kind, where)
        if kind == "unitary":
            states.append(pure_strategy_state(decode_matrix(value, value_where), player.basis))
        elif kind == "params":
            angles = _decode_reals(value, value_where, length=4)
            u = unitary_from_params(UnitaryParams(*angles))
            states.append(pure_strategy_state(u, player.basis))
        elif kind == "pdf":
            states.append(classical_mixture_state(_decode_reals(value, value_where), player.basis))
        else:
            states.append(StrategyDensity(player.basis, decode_matrix(value, value_where)))
    return states


def load_profile_file(path: PathLike, g: GameDefinition) -> List[StrategyDensity]:

    return parse_profile_document(read_document(path), g)
