from qgame_labs.cli._game_files import (
    NAMED_BASES,
    PROFILE_ENTRY_KINDS,
    read_document,
    write_document,
    parse_game_document,
    load_game_file,
    game_document,
    save_game_file,
    parse_profile_document,
    load_profile_file,
)
from qgame_labs.cli._commands import (
    cmd_payoff,
    cmd_eval,
    cmd_solve,
    cmd_check,
    cmd_demo,
    build_parser,
    main,
)

__all__ = [
    "NAMED_BASES",
    "PROFILE_ENTRY_KINDS",
    "read_document",
    "write_document",
    "parse_game_document",
    "load_game_file",
    "game_document",
    "save_game_file",
    "parse_profile_document",
    "load_profile_file",
    "cmd_payoff",
    "cmd_eval",
    "cmd_solve",
    "cmd_check",
    "cmd_demo",
    "build_parser",
    "main",
]
