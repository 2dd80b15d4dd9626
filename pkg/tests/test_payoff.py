import threading
import numpy as np
import pytest
from unittest.mock import patch
from qgame_labs.game import (
    GameDefinition,
    PlayerSpec,
    PureProfile,
    classical_game_from_table,
    make_pfg,
    make_pfg_table,
    make_sfg,
    manipulative_payoff,
    validate_game,
)
from qgame_labs.opspace import (
    StrategyDensity,
    classical_basis,
    classical_mixture_state,
    heisenberg_weyl_basis,
    pauli_basis,
    pure_strategy_state,
    random_unitary,
    random_unitary_in_span,
)
from qgame_labs.payoff import (
    build_payoff_operator,
    classical_payoff_operator,
    consistency_check,
    correlated_state,
    expected_payoff,
    joint_state,
    list_payoff_entries,
    list_reference_matrices,
    payoff_operators,
    reference_document,
    reference_payoff_matrix,
)

X = np.array([[0, 1], [1, 0]])
Y = np.array([[0, -1j], [1j, 0]])
S = 1 / np.sqrt(2)
ENTRY_VALUES = np.array([0, 1, -1, 1j, -1j])


def _entry(h, row, col):
    return h.matrix[h.labels.index(row), h.labels.index(col)]


def _random_game(rng, d=2, n_players=2):
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho0 = a @ a.conj().T
    players = []
    for k in range(n_players):
        b = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        players.append(PlayerSpec(f"p{k}", pauli_basis() if d == 2 else heisenberg_weyl_basis(d), b + b.conj().T))
    return GameDefinition(d, rho0 / np.trace(rho0).real, tuple(players), name="random")


def test_sfg_payoff_operator_anchors():

    h = build_payoff_operator(make_sfg(), 0)
    assert h.joint_dim == 16
    assert h.labels[6] == "XY"
    assert _entry(h, "II", "II") == 1
    assert _entry(h, "XX", "II") == 1
    assert _entry(h, "YY", "YY") == 1
    assert _entry(h, "II", "XY") == -1j
    assert _entry(h, "XY", "II") == 1j
    assert np.allclose(h.matrix[0], [1, 0, 0, 1, 0, 1, -1j, 0, 0, 1j, 1, 0, 1, 0, 0, 1])
    assert np.allclose(np.diag(h.matrix).real, [1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1])


def test_sfg_payoff_operator_entries_are_units():

    h = build_payoff_operator(make_sfg(), 0)
    distance = np.min(np.abs(h.matrix[..., None] - ENTRY_VALUES), axis=-1)
    assert np.max(distance) <= 1e-12


def test_sfg_payoff_operator_matches_fixture():

    assert "sfg_payoff_player1" in list_reference_matrices()
    fixture = reference_payoff_matrix("sfg_payoff_player1")
    h = build_payoff_operator(make_sfg(), 0)
    assert np.max(np.abs(h.matrix - fixture)) <= 1e-12
    assert reference_document("sfg_payoff_player1")["labels"] == list(h.labels)
    with pytest.raises(ValueError):
        reference_document("missing")


def test_published_matrix_relation():

    published = reference_payoff_matrix("sfg_payoff_player1_published")
    h = build_payoff_operator(make_sfg(), 0).matrix
    swap = [4 * (k % 4) + k // 4 for k in range(16)]
    swapped = np.conj(h)[np.ix_(swap, swap)]

    broken = [(6, 3), (6, 5), (6, 10), (6, 12), (6, 15)]
    mask = np.ones((16, 16), dtype=bool)
    for r, c in broken:
        mask[r, c] = False
        mask[c, r] = False
    assert np.max(np.abs((published - swapped)[mask])) <= 1e-12
    assert np.allclose(published[0], h[0])
    for r, c in broken:
        assert published[r, c] == -1j
        assert published[c, r] == -1j


def test_payoff_operators_are_hermitian_and_zero_sum():

    for g in (make_pfg(), make_sfg()):
        hs = payoff_operators(g)
        for h in hs:
            assert h.hermiticity_residual() <= 1e-12
        assert np.max(np.abs(hs[0].matrix + hs[1].matrix)) <= 1e-12

    rng = np.random.default_rng(1)
    for _ in range(5):
        for h in payoff_operators(_random_game(rng)):
            assert h.hermiticity_residual() <= 1e-12


def test_pfg_operators():

    hs = payoff_operators(make_pfg())
    assert np.array_equal(np.diag(hs[0].matrix), [1, -1, -1, 1])
    assert _entry(hs[0], "II", "XX") == 1
    assert _entry(hs[0], "IX", "XI") == -1

    table = make_pfg_table()
    h1 = classical_payoff_operator(table, 0)
    h2 = classical_payoff_operator(table, 1)
    assert np.array_equal(h1.matrix, np.diag([1, -1, -1, 1]))
    assert np.array_equal(h2.matrix, np.diag([-1, 1, 1, -1]))
    assert np.count_nonzero(h1.matrix - np.diag(np.diag(h1.matrix))) == 0
    assert [h.player for h in payoff_operators(table)] == [0, 1]


def test_table_operator_shapes():

    constant = classical_game_from_table(np.full((1, 2), 3.0), d=2, n_players=1)
    assert np.array_equal(classical_payoff_operator(constant, 0).matrix, 3 * np.eye(2))

    rng = np.random.default_rng(0)
    three = classical_game_from_table(rng.standard_normal((2, 3, 3)), d=3, n_players=2)
    h = classical_payoff_operator(three, 1)
    assert h.matrix.shape == (9, 9)
    assert np.count_nonzero(h.matrix - np.diag(np.diag(h.matrix))) == 0


def test_build_payoff_operator_is_cached():

    g = make_sfg()
    with patch("qgame_labs.payoff._payoff_operators._payoff_matrix", wraps=lambda game, scale: np.zeros((16, 16))) as built:
        first = build_payoff_operator(g, 0)
        second = build_payoff_operator(g, 0)
    assert first is second
    assert built.call_count == 1


def test_build_payoff_operator_concurrent_reads():

    g = make_sfg()
    results = []
    threads = [threading.Thread(target=lambda: results.append(build_payoff_operator(g, 1))) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(results) == 8
    assert all(r is results[0] for r in results)


def test_build_payoff_operator_rejects_bad_input():

    with pytest.raises(ValueError):
        build_payoff_operator(make_sfg(), 2)
    bad = GameDefinition(2, np.diag([2, -1]), (PlayerSpec("p", pauli_basis(), np.diag([1, -1])),))
    with pytest.raises(ValueError):
        build_payoff_operator(bad, 0)


def test_build_payoff_operator_accepts_scales_within_validation_tolerance():

    nearly_hermitian = np.array([[1, 1e-10], [0, -1]])
    g = GameDefinition(
        2,
        np.diag([1.0, 0.0]),
        (PlayerSpec("p1", pauli_basis(), nearly_hermitian), PlayerSpec("p2", pauli_basis(), np.diag([-1, 1]))),
    )
    assert validate_game(g) == []
    h = build_payoff_operator(g, 0)
    assert h.hermiticity_residual() == 0.0
    assert np.max(np.abs(h.matrix - build_payoff_operator(make_sfg(), 0).matrix)) <= 1e-9
    assert consistency_check(g, trials=50).passed


def test_joint_states():

    pfg = make_pfg()
    half = classical_mixture_state([0.5, 0.5], classical_basis(2))
    assert np.allclose(joint_state([half, half], pfg).matrix, np.eye(4) / 4)

    pauli = pauli_basis()
    pure_i = pure_strategy_state(np.eye(2), pauli)
    s = joint_state([pure_i, pure_i], make_sfg())
    assert s.is_product
    assert np.count_nonzero(s.matrix) == 1 and s.matrix[0, 0] == 1

    xy = pure_strategy_state((X + Y) * S, pauli)
    m = joint_state([xy, xy]).matrix
    block = [5, 6, 9, 10]
    assert np.allclose(m[np.ix_(block, block)], 0.25)
    assert np.count_nonzero(np.abs(m) > 1e-12) == 16

    with pytest.raises(ValueError):
        joint_state([half, pure_i], make_sfg())
    with pytest.raises(ValueError):
        joint_state([half], pfg)


def test_correlated_state():

    pfg = make_pfg()
    bell = np.zeros((4, 4))
    bell[np.ix_([0, 3], [0, 3])] = 0.5
    s = correlated_state(bell, pfg)
    assert not s.is_product
    assert expected_payoff(s, classical_payoff_operator(make_pfg_table(), 0)) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        correlated_state(np.eye(2) / 2, pfg)
    with pytest.raises(ValueError):
        correlated_state(np.diag([2, -1, 0, 0]), pfg)


def test_expected_payoffs():

    sfg = make_sfg()
    h1 = payoff_operators(sfg)[0]
    pauli = pauli_basis()
    pure_i = pure_strategy_state(np.eye(2), pauli)
    assert expected_payoff(joint_state([pure_i, pure_i]), h1) == pytest.approx(1.0)

    uniform = classical_mixture_state([0.25] * 4, pauli)
    rng = np.random.default_rng(2)
    for _ in range(10):
        first = pure_strategy_state(random_unitary(2, rng), pauli)
        assert abs(expected_payoff(joint_state([first, uniform]), h1)) <= 1e-10

    pfg = make_pfg()
    half = classical_mixture_state([0.5, 0.5], classical_basis(2))
    assert abs(expected_payoff(joint_state([half, half]), payoff_operators(pfg)[0])) <= 1e-12

    with pytest.raises(ValueError):
        expected_payoff(joint_state([half, half]), h1)


def test_depolarizing_mixture_fixes_every_payoff():

    sfg = make_sfg()
    pauli = pauli_basis()
    uniform = classical_mixture_state([0.25] * 4, pauli)
    rng = np.random.default_rng(4)
    for _ in range(10):
        weights = rng.dirichlet(np.ones(3))
        rho = sum(
            w * pure_strategy_state(random_unitary(2, rng), pauli).rho for w in weights
        )
        other = StrategyDensity(pauli, rho)
        for states in ([uniform, other], [other, uniform]):
            for h, p in zip(payoff_operators(sfg), sfg.players):
                assert abs(expected_payoff(joint_state(states), h) - np.trace(p.scale).real / 2) <= 1e-10


def test_payoffs_are_linear_in_mixtures():

    sfg = make_sfg()
    pauli = pauli_basis()
    h1 = payoff_operators(sfg)[0]
    rng = np.random.default_rng(8)
    for _ in range(200):
        u1, u2, v = (random_unitary_in_span(pauli, rng) for _ in range(3))
        alpha = rng.uniform()
        a = pure_strategy_state(u1, pauli)
        b = pure_strategy_state(u2, pauli)
        opponent = pure_strategy_state(v, pauli)
        mixed = StrategyDensity(pauli, alpha * a.rho + (1 - alpha) * b.rho)
        value = expected_payoff(joint_state([mixed, opponent]), h1)
        pure_a = manipulative_payoff(sfg, PureProfile((u1, v)))[0]
        pure_b = manipulative_payoff(sfg, PureProfile((u2, v)))[0]
        assert abs(value - (alpha * pure_a + (1 - alpha) * pure_b)) <= 1e-10


def test_list_payoff_entries():

    df = list_payoff_entries(build_payoff_operator(make_sfg(), 0))
    assert list(df.columns) == ["Row", "Column", "Real", "Imaginary"]
    hit = df[(df["Row"] == "XX") & (df["Column"] == "II")]
    assert hit["Real"].tolist() == [1.0]
    assert len(df) == np.count_nonzero(np.abs(build_payoff_operator(make_sfg(), 0).matrix) > 1e-12)


def test_consistency_checks_pass():

    for g in (make_pfg(), make_sfg()):
        report = consistency_check(g, trials=1000, seed=0)
        assert report.passed
        assert report.status == "PASS"
        assert report.max_deviation <= 1e-10
        assert "PASS" in report.summary()

    single = GameDefinition(
        2, np.diag([1, 0]), (PlayerSpec("solo", pauli_basis(), np.diag([1, -1])),), name="solo"
    )
    assert consistency_check(single, trials=100, seed=3).passed

    qutrit = _random_game(np.random.default_rng(6), d=3)
    assert consistency_check(qutrit, trials=50, seed=1).passed


def test_consistency_check_covers_basis_profiles():

    report = consistency_check(make_pfg(), trials=0)
    details = report.details
    assert details["Profile"].tolist() == ["II", "II", "IX", "IX", "XI", "XI", "XX", "XX"]
    player_1 = details[details["Player"] == 1]["Manipulative Payoff"].tolist()
    assert player_1 == [1.0, -1.0, -1.0, 1.0]
    with pytest.raises(ValueError):
        consistency_check(make_pfg(), trials=-1)


def test_consistency_check_is_deterministic():

    first = consistency_check(make_sfg(), trials=50, seed=9)
    second = consistency_check(make_sfg(), trials=50, seed=9)
    assert first.summary() == second.summary()
    assert first.details.equals(second.details)


def test_consistency_check_reports_failures():

    g = make_sfg()
    with patch("qgame_labs.payoff._consistency.manipulative_payoff", return_value=[5.0, 5.0]):
        report = consistency_check(g, trials=3, seed=0)
    assert not report.passed
    assert report.status == "FAIL"
