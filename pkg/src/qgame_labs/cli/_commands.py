import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence
import json
import numpy as np
import qgame_labs._icons as icons
from qgame_labs._log import configure_logging, log
from qgame_labs._serialization import GameFileError, matrix_document
from qgame_labs.cli._game_files import (
    PathLike,
    load_game_file,
    load_profile_file,
    save_game_file,
    write_document,
)
from qgame_labs.equilibrium import SolveReport, solve
from qgame_labs.game import DEMO_GAMES, GameDefinition, make_demo, print_game_tree, validate_game
from qgame_labs.payoff import (
    build_payoff_operator,
    consistency_check,
    expected_payoff,
    joint_state,
    list_payoff_entries,
    payoff_operators,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID = 3

MODE_FLAGS = {"operator": "operator-density", "classical": "classical-diagonal"}


def _error(message: str):

    print(message, file=sys.stderr)


def _number(x: float) -> str:

    return f"{float(x) + 0.0:.12g}"


def _entry(z: complex) -> str:

    re = round(z.real, 6) + 0.0
    im = round(z.imag, 6) + 0.0
    return f"{re:.6f}{im:+.6f}i"


def _load_valid_game(game_file: PathLike) -> GameDefinition:
    """
    Loads a game file; malformed files raise GameFileError, invalid games _InvalidGame.
    """

    g = load_game_file(game_file)
    violations = validate_game(g)
    if violations:
        raise _InvalidGame(violations)
    return g


class _InvalidGame(Exception):
    def __init__(self, violations: List[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


def _report_invalid(game_file: PathLike, e: _InvalidGame) -> int:

    _error(f"{icons.red_dot} The game in '{game_file}' is invalid:")
    for violation in e.violations:
        _error(f"  {icons.bullet} {violation}")
    return EXIT_INVALID


@log
def cmd_payoff(
    game_file: PathLike,
    player: int = 1,
    output: Optional[PathLike] = None,
    entries: bool = False,
) -> int:
    """
    Emits the payoff operator of one player.

    Parameters
    ----------
    game_file : str | pathlib.Path
        The game file.
    player : int, default=1
        The player, counted from 1.
    output : str | pathlib.Path, default=None
        Where to write the matrix document. Defaults to None, which prints it.
    entries : bool, default=False
        Also prints the table of non-zero entries.

    Returns
    -------
    int
        The exit code.
    """

    try:
        g = _load_valid_game(game_file)
    except GameFileError as e:
        _error(str(e))
        return EXIT_USAGE
    except _InvalidGame as e:
        return _report_invalid(game_file, e)

    if not 1 <= player <= g.n_players:
        _error(f"{icons.red_dot} Invalid player {player}; the '{g.name}' game has players 1 to {g.n_players}.")
        return EXIT_USAGE

    try:
        h = build_payoff_operator(g, player - 1)
    except ValueError as e:
        _error(str(e))
        return EXIT_INVALID
    document = matrix_document(h.matrix, labels=h.labels, game=g.name, player=player)
    print(f"Payoff operator of player {player} in the '{g.name}' game")
    print(f"Dimensions: {h.joint_dim} x {h.joint_dim}")
    print(f"Hermiticity residual: {h.hermiticity_residual():.3e}")
    if entries:
        print(list_payoff_entries(h).to_string(index=False))
    if output is not None:
        write_document(document, output)
        print(f"{icons.green_dot} Wrote the payoff operator to '{output}'.")
    else:
        print(json.dumps(document))
    return EXIT_OK


@log
def cmd_eval(game_file: PathLike, profile_file: PathLike) -> int:
    """
    Prints every player's expected payoff for a profile file.

    Parameters
    ----------
    game_file : str | pathlib.Path
        The game file.
    profile_file : str | pathlib.Path
        One strategy entry per player.

    Returns
    -------
    int
        The exit code.
    """

    try:
        g = _load_valid_game(game_file)
        states = load_profile_file(profile_file, g)
    except GameFileError as e:
        _error(str(e))
        return EXIT_USAGE
    except _InvalidGame as e:
        return _report_invalid(game_file, e)
    except ValueError as e:
        _error(f"{icons.red_dot} The profile in '{profile_file}' does not fit the game: {str(e).replace(icons.red_dot, '').strip()}")
        return EXIT_INVALID

    try:
        hs = payoff_operators(g)
    except ValueError as e:
        _error(str(e))
        return EXIT_INVALID

    joint = joint_state(states, g)
    for k, (player, h) in enumerate(zip(g.players, hs), start=1):
        print(f"Player {k} ({player.name}): {_number(expected_payoff(joint, h))}")
    return EXIT_OK


def _print_report(report: SolveReport):

    icon = icons.green_dot if report.converged else icons.red_dot
    outcome = "Converged" if report.converged else "Did not converge"
    print(f"{icon} {outcome} after {report.iterations} round(s) (target {_number(report.eps)}).")
    print(f"Mode: {report.profile.mode}")
    print(f"Exploitability: {_number(report.exploitability)}")
    for k, payoff in enumerate(report.payoffs, start=1):
        print(f"Player {k} payoff: {_number(payoff)}")
    for k, state in enumerate(report.profile.states, start=1):
        print(f"Player {k} strategy density over ({', '.join(state.basis.labels)}):")
        for row in np.asarray(state.rho):
            print("  " + "  ".join(_entry(z) for z in row))


@log
def cmd_solve(
    game_file: PathLike,
    mode: str = "operator",
    eps: float = 1e-3,
    max_iters: int = 10000,
    seed: int = 0,
    init: str = "uniform",
) -> int:
    """
    Searches for an ε-Nash equilibrium and prints the report.

    Parameters
    ----------
    game_file : str | pathlib.Path
        The game file.
    mode : str, default="operator"
        "operator" for operator densities, "classical" for diagonal mixtures.
    eps : float, default=1e-3
        Target exploitability.
    max_iters : int, default=10000
        Largest number of rounds.
    seed : int, default=0
        Seed of the random starting profile.
    init : str, default="uniform"
        "uniform" or "random" starting profile.

    Returns
    -------
    int
        0 if the search converged, 1 otherwise.
    """

    if mode not in MODE_FLAGS:
        _error(f"{icons.red_dot} Invalid mode '{mode}'. Valid options: {tuple(MODE_FLAGS)}.")
        return EXIT_USAGE
    try:
        g = _load_valid_game(game_file)
    except GameFileError as e:
        _error(str(e))
        return EXIT_USAGE
    except _InvalidGame as e:
        return _report_invalid(game_file, e)

    try:
        hs = payoff_operators(g)
    except ValueError as e:
        _error(str(e))
        return EXIT_INVALID

    try:
        report = solve(
            hs,
            mode=MODE_FLAGS[mode],
            eps=eps,
            max_iters=max_iters,
            seed=seed,
            initial=init,
        )
    except ValueError as e:
        _error(str(e))
        return EXIT_USAGE
    _print_report(report)
    return EXIT_OK if report.converged else EXIT_FAILED


@log
def cmd_check(game_file: PathLike, trials: int = 1000, seed: int = 0) -> int:
    """
    Runs the payoff consistency check on a game file.

    Parameters
    ----------
    game_file : str | pathlib.Path
        The game file.
    trials : int, default=1000
        Number of random pure profiles.
    seed : int, default=0
        Seed of the random profiles.

    Returns
    -------
    int
        0 on PASS, 1 on FAIL.
    """

    try:
        g = _load_valid_game(game_file)
    except GameFileError as e:
        _error(str(e))
        return EXIT_USAGE
    except _InvalidGame as e:
        return _report_invalid(game_file, e)

    try:
        report = consistency_check(g, trials=trials, seed=seed)
    except ValueError as e:
        _error(str(e))
        return EXIT_INVALID
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAILED


@log
def cmd_demo(name: str, output_dir: PathLike = ".") -> int:
    """
    Writes a demo game file and the payoff operators of its players.

    Parameters
    ----------
    name : str
        "pfg" or "sfg".
    output_dir : str | pathlib.Path, default="."
        Target folder; created if missing.

    Returns
    -------
    int
        The exit code.
    """

    if name not in DEMO_GAMES:
        _error(f"{icons.red_dot} Invalid demo '{name}'. Valid options: {DEMO_GAMES}.")
        return EXIT_USAGE

    g = make_demo(name)
    folder = Path(output_dir)
    game_path = folder / f"{name}.game.json"
    save_game_file(g, game_path)
    written = [game_path]
    for k in range(g.n_players):
        h = build_payoff_operator(g, k)
        path = folder / f"{name}.payoff.player{k + 1}.json"
        write_document(matrix_document(h.matrix, labels=h.labels, game=g.name, player=k + 1), path)
        written.append(path)

    print_game_tree(g)
    for path in written:
        print(f"{icons.green_dot} Wrote '{path}'.")
    return EXIT_OK


def _positive_float(value: str) -> float:

    try:
        x = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number: '{value}'")
    if not x > 0 or not np.isfinite(x):
        raise argparse.ArgumentTypeError(f"must be a positive number: '{value}'")
    return x


def _non_negative_int(value: str) -> int:

    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: '{value}'")
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: '{value}'")
    return n


def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(
        prog="qgame",
        description="Payoff operators, payoff evaluation and equilibria of games played on classical and quantum objects.",
    )
    parser.add_argument("--verbose", action="store_true", help="log debug messages to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    payoff = commands.add_parser("payoff", help="emit a player's payoff operator")
    payoff.add_argument("game_file")
    payoff.add_argument("--player", type=int, default=1, help="player number, from 1")
    payoff.add_argument("--output", help="write the matrix document here instead of stdout")
    payoff.add_argument("--entries", action="store_true", help="also list the non-zero entries")

    evaluate = commands.add_parser("eval", help="expected payoffs of a strategy profile")
    evaluate.add_argument("game_file")
    evaluate.add_argument("profile_file")

    solver = commands.add_parser("solve", help="search for an epsilon-Nash equilibrium")
    solver.add_argument("game_file")
    solver.add_argument("--mode", choices=tuple(MODE_FLAGS), default="operator")
    solver.add_argument("--eps", type=_positive_float, default=1e-3)
    solver.add_argument("--max-iters", type=_non_negative_int, default=10000)
    solver.add_argument("--seed", type=int, default=0)
    solver.add_argument("--init", choices=("uniform", "random"), default="uniform")

    check = commands.add_parser("check", help="compare trace-formula and direct payoffs")
    check.add_argument("game_file")
    check.add_argument("--trials", type=_non_negative_int, default=1000)
    check.add_argument("--seed", type=int, default=0)

    demo = commands.add_parser("demo", help="write a demo game and its payoff operators")
    demo.add_argument("name")
    demo.add_argument("--output-dir", default=".")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the ``qgame`` command.

    Exit codes: 0 success, 1 non-convergence or failed check, 2 usage or parse error,
    3 validation error.
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    configure_logging(args.verbose)

    if args.command == "payoff":
        return cmd_payoff(args.game_file, args.player, args.output, args.entries)
    if args.command == "eval":
        return cmd_eval(args.game_file, args.profile_file)
    if args.command == "solve":
        return cmd_solve(args.game_file, args.mode, args.eps, args.max_iters, args.seed, args.init)
    if args.command == "check":
        return cmd_check(args.game_file, args.trials, args.seed)
    return cmd_demo(args.name, args.output_dir)
