from qgame_labs.game._definition import (
    COMPOSITION,
    PlayerSpec,
    GameDefinition,
    PureProfile,
    validate_game,
    check_game,
    list_players,
    scale_sum,
)
from qgame_labs.game._evolution import (
    joint_operation,
    evolve_object,
    manipulative_payoff,
)
from qgame_labs.game._table_games import (
    TABLE_GAME_KIND,
    ClassicalTableGame,
    classical_game_from_table,
)
from qgame_labs.game._demos import (
    DEMO_GAMES,
    make_pfg,
    make_sfg,
    make_pfg_table,
    make_demo,
)
from qgame_labs.game._game_tree import (
    game_tree,
    print_game_tree,
)

__all__ = [
    "COMPOSITION",
    "PlayerSpec",
    "GameDefinition",
    "PureProfile",
    "validate_game",
    "check_game",
    "list_players",
    "scale_sum",
    "joint_operation",
    "evolve_object",
    "manipulative_payoff",
    "TABLE_GAME_KIND",
    "ClassicalTableGame",
    "classical_game_from_table",
    "DEMO_GAMES",
    "make_pfg",
    "make_sfg",
    "make_pfg_table",
    "make_demo",
    "game_tree",
    "print_game_tree",
]
