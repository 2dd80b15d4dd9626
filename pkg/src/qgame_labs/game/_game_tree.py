import numpy as np
from anytree import Node, RenderTree
from typing import Union
import qgame_labs._icons as icons
from qgame_labs.game._definition import GameDefinition
from qgame_labs.game._table_games import ClassicalTableGame


def _number(z: complex) -> str:

    if z.imag == 0.0:
        return f"{z.real:g}"
    return f"{complex(z):g}"


def _scale_text(scale: np.ndarray) -> str:

    if np.count_nonzero(scale - np.diag(np.diag(scale))) == 0:
        return "scale diag(" + ", ".join(_number(v) for v in np.diag(scale)) + ")"
    rows = ("[" + ", ".join(_number(v) for v in row) + "]" for row in scale)
    return "scale [" + ", ".join(rows) + "]"


def game_tree(g: Union[GameDefinition, ClassicalTableGame]) -> Node:
    """
    Builds a tree of the game, its players and their strategy bases.

    Parameters
    ----------
    g : GameDefinition | ClassicalTableGame
        The game.

    Returns
    -------
    anytree.Node
        The root node; every node has a ``custom_property`` icon prefix.
    """

    if isinstance(g, ClassicalTableGame):
        root = Node(f"{g.name} ({g.kind}, {g.joint_dim} joint profiles)")
        root.custom_property = icons.operator_icon + " "
        names = [f"player {k}" for k in range(1, g.n_players + 1)]
        scales = [None] * g.n_players
    else:
        root = Node(f"{g.name} (object dim {g.object_dim}, joint dim {g.joint_dim})")
        root.custom_property = icons.operator_icon + " "
        names = [p.name for p in g.players]
        scales = [p.scale for p in g.players]

    for name, basis, scale in zip(names, g.bases, scales):
        player_node = Node(name, parent=root)
        player_node.custom_property = icons.player_icon + " "
        basis_node = Node(f"{basis.kind} basis", parent=player_node)
        basis_node.custom_property = icons.basis_icon + " "
        for label in basis.labels:
            element = Node(label, parent=basis_node)
            element.custom_property = icons.bullet + " "
        if scale is not None:
            scale_node = Node(_scale_text(scale), parent=player_node)
            scale_node.custom_property = icons.bullet + " "

    return root


def print_game_tree(g: Union[GameDefinition, ClassicalTableGame]):
    """
    Prints the tree built by :func:`game_tree`.
    """

    for pre, _, node in RenderTree(game_tree(g)):
        print(f"{pre}{node.custom_property}{node.name}")
