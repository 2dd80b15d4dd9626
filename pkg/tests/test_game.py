import numpy as np
import pytest
from qgame_labs.game import (
    GameDefinition,
    PlayerSpec,
    PureProfile,
    check_game,
    classical_game_from_table,
    evolve_object,
    game_tree,
    joint_operation,
    list_players,
    make_demo,
    make_pfg,
    make_pfg_table,
    make_sfg,
    manipulative_payoff,
    print_game_tree,
    scale_sum,
    validate_game,
)
from qgame_labs.linalg import is_density_matrix
from qgame_labs.opspace import pauli_basis, random_unitary_in_span

X = np.array([[0, 1], [1, 0]])
Y = np.array([[0, -1j], [1j, 0]])


def _profile(g, *labels):
    return PureProfile.from_labels(g, labels)


def test_demo_games():

    pfg = make_pfg()
    assert pfg.object_dim == 2
    assert pfg.n_players == 2
    assert pfg.bases[0].labels == ("I", "X")
    assert np.array_equal(pfg.initial_state, np.diag([1, 0]))
    assert np.array_equal(scale_sum(pfg), np.zeros((2, 2)))
    assert validate_game(pfg) == []

    sfg = make_sfg()
    assert [len(b) for b in sfg.bases] == [4, 4]
    assert sfg.joint_dim == 16
    assert sfg.joint_labels()[:5] == ["II", "IX", "IY", "IZ", "XI"]
    assert np.array_equal(sfg.players[0].scale, np.diag([1, -1]))
    assert sfg.composition == "later players multiply on the left"

    assert make_demo("sfg").name == "sfg"
    with pytest.raises(ValueError):
        make_demo("chess")


def test_validate_game_reports_violations():

    pauli = pauli_basis()
    bad_state = GameDefinition(2, np.diag([2, -1]), (PlayerSpec("p", pauli, np.diag([1, -1])),))
    violations = validate_game(bad_state)
    assert len(violations) == 1
    assert "density matrix" in violations[0]

    bad_scale = GameDefinition(2, np.diag([1, 0]), (PlayerSpec("p", pauli, [[0, 1], [0, 0]]),))
    violations = validate_game(bad_scale)
    assert len(violations) == 1
    assert "not Hermitian" in violations[0]
    with pytest.raises(ValueError):
        check_game(bad_scale)

    wrong_dim = GameDefinition(3, np.diag([1, 0, 0]), (PlayerSpec("p", pauli, np.eye(3)),))
    assert len(validate_game(wrong_dim)) == 1

    with pytest.raises(ValueError):
        GameDefinition(2, np.diag([1, 0]), ())


def test_evolve_object():

    sfg = make_sfg()
    assert np.allclose(evolve_object(sfg, _profile(sfg, "I", "I")), np.diag([1, 0]))
    assert np.allclose(evolve_object(sfg, _profile(sfg, "X", "I")), np.diag([0, 1]))
    assert np.allclose(evolve_object(sfg, _profile(sfg, "X", "X")), np.diag([1, 0]))


def test_joint_operation_composes_later_players_on_the_left():

    sfg = make_sfg()
    assert np.allclose(joint_operation(sfg, PureProfile((X, Y))), Y @ X)


def test_evolve_object_rejects_bad_profiles():

    sfg = make_sfg()
    with pytest.raises(ValueError):
        evolve_object(sfg, PureProfile((X + Y, np.eye(2))))
    with pytest.raises(ValueError):
        evolve_object(sfg, PureProfile((X,)))

    pfg = make_pfg()
    with pytest.raises(ValueError):
        evolve_object(pfg, PureProfile((Y, np.eye(2))))


def test_manipulative_payoffs():

    sfg = make_sfg()
    assert manipulative_payoff(sfg, _profile(sfg, "I", "I")) == [1.0, -1.0]
    assert manipulative_payoff(sfg, _profile(sfg, "Y", "Y")) == [1.0, -1.0]

    pfg = make_pfg()
    assert manipulative_payoff(pfg, _profile(pfg, "X", "I")) == [-1.0, 1.0]
    table = {("I", "I"): 1.0, ("X", "X"): 1.0, ("I", "X"): -1.0, ("X", "I"): -1.0}
    for labels, value in table.items():
        assert manipulative_payoff(pfg, _profile(pfg, *labels))[0] == value


def test_evolution_preserves_density_matrices():

    sfg = make_sfg()
    rng = np.random.default_rng(5)
    for _ in range(50):
        profile = PureProfile(tuple(random_unitary_in_span(p.basis, rng) for p in sfg.players))
        assert is_density_matrix(evolve_object(sfg, profile), 1e-10)


def test_table_games():

    pfg = make_pfg_table()
    assert pfg.kind == "classical-table"
    assert pfg.joint_dim == 4
    assert pfg.joint_labels() == ["II", "IX", "XI", "XX"]
    assert pfg.payoff(0, (0, 0)) == 1.0
    assert pfg.payoff(1, (0, 1)) == 1.0

    three = classical_game_from_table(np.zeros((2, 3, 3)), d=3, n_players=2)
    assert three.joint_dim == 9
    assert three.labels == ("I", "S", "S^2")

    with pytest.raises(ValueError):
        classical_game_from_table([[1, -1], [-1, 1]], d=2, n_players=2)
    with pytest.raises(ValueError):
        classical_game_from_table([[[1, -1], [-1]], [[1, 1], [1, 1]]], d=2, n_players=2)
    with pytest.raises(ValueError):
        classical_game_from_table(np.zeros((1, 1)), d=1, n_players=1)


def test_list_players():

    df = list_players(make_sfg())
    assert list(df.columns) == ["Player", "Name", "Basis Kind", "Basis Size", "Basis Labels", "Scale Trace"]
    assert df["Basis Labels"].tolist() == ["I, X, Y, Z"] * 2
    assert df["Scale Trace"].tolist() == [0.0, 0.0]


def test_game_tree(capsys):

    root = game_tree(make_pfg())
    assert [child.name for child in root.children] == ["player 1", "player 2"]

    print_game_tree(make_pfg_table())
    out = capsys.readouterr().out
    assert "pfg-table" in out
    assert "classical basis" in out


def test_game_tree_shows_scale_operators(capsys):

    print_game_tree(make_sfg())
    assert "scale diag(1, -1)" in capsys.readouterr().out

    flip_scale = GameDefinition(2, np.diag([1, 0]), (PlayerSpec("p", pauli_basis(), X),))
    print_game_tree(flip_scale)
    out = capsys.readouterr().out
    assert "scale [[0, 1], [1, 0]]" in out
    assert "diag" not in out
