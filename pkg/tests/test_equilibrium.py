import numpy as np
import pytest
from qgame_labs.equilibrium import (
    MIXED,
    NOT_REALIZABLE,
    REALIZABLE,
    Profile,
    best_response,
    effective_payoff_operator,
    exploitability,
    player_regrets,
    solve,
    unitary_realizability,
)
from qgame_labs.game import GameDefinition, PlayerSpec, make_pfg, make_pfg_table, make_sfg
from qgame_labs.opspace import (
    StrategyDensity,
    classical_basis,
    classical_mixture_state,
    maximally_mixed_state,
    pauli_basis,
    pure_strategy_state,
    random_unitary,
    strategy_from_coefficients,
)
from qgame_labs.payoff import expected_payoff, joint_state, payoff_operators

OPERATOR = "operator-density"
CLASSICAL = "classical-diagonal"
X = np.array([[0, 1], [1, 0]])
Y = np.array([[0, -1j], [1j, 0]])


def _pure(u, basis=None):
    return pure_strategy_state(u, basis or pauli_basis())


def _random_density(rng, n=4):
    w = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rho = w @ w.conj().T
    return StrategyDensity(pauli_basis(), rho / np.trace(rho).real)


def _scaled_sfg(c):
    heads_pays = c * np.diag([1.0, -1.0])
    return GameDefinition(
        2,
        np.diag([1.0, 0.0]),
        (PlayerSpec("player 1", pauli_basis(), heads_pays), PlayerSpec("player 2", pauli_basis(), -heads_pays)),
        name=f"sfg x{c}",
    )


def test_effective_operator_against_pure_identity():

    hs = payoff_operators(make_sfg())
    identity = _pure(np.eye(2))
    r = effective_payoff_operator(hs[0], Profile((identity, identity)), 0)
    assert np.allclose(np.diag(r).real, [1, -1, -1, 1])
    assert r[0, 3] == pytest.approx(1.0)
    assert np.max(np.abs(r - r.conj().T)) <= 1e-12


def test_effective_operator_against_depolarizing_mixture():

    hs = payoff_operators(make_sfg())
    uniform = maximally_mixed_state(pauli_basis())
    first = _pure(random_unitary(2, 0))
    r = effective_payoff_operator(hs[0], Profile((first, uniform)), 0)
    assert np.max(np.abs(r)) <= 1e-12


def test_effective_operator_reproduces_expected_payoffs():

    hs = payoff_operators(make_sfg())
    rng = np.random.default_rng(12)
    for _ in range(20):
        states = (_random_density(rng), _random_density(rng))
        p = Profile(states)
        for i, h in enumerate(hs):
            r = effective_payoff_operator(h, p, i)
            assert np.max(np.abs(r - r.conj().T)) <= 1e-12
            traced = np.trace(states[i].rho @ r).real
            assert abs(traced - expected_payoff(joint_state(states), h)) <= 1e-12


def test_effective_operator_rejects_bad_indices():

    hs = payoff_operators(make_sfg())
    uniform = maximally_mixed_state(pauli_basis())
    with pytest.raises(ValueError):
        effective_payoff_operator(hs[0], Profile((uniform, uniform)), 2)
    half = classical_mixture_state([0.5, 0.5], classical_basis(2))
    with pytest.raises(ValueError):
        effective_payoff_operator(hs[0], Profile((half, half)), 0)


def test_best_response_against_pure_identity():

    hs = payoff_operators(make_sfg())
    identity = _pure(np.eye(2))

    classical = best_response(hs[0], Profile((identity, identity), CLASSICAL), 0)
    assert classical.value == pytest.approx(1.0)
    assert np.allclose(classical.state.rho, np.diag([1, 0, 0, 0]))

    operator = best_response(hs[0], Profile((identity, identity)), 0)
    assert operator.value == pytest.approx(2.0)
    expected = np.zeros((4, 4))
    expected[np.ix_([0, 3], [0, 3])] = 0.5
    assert np.allclose(operator.state.rho, expected)
    assert unitary_realizability(operator.state).status == NOT_REALIZABLE


def test_best_response_against_mixtures():

    hs = payoff_operators(make_sfg())
    uniform = maximally_mixed_state(pauli_basis())
    for mode in (OPERATOR, CLASSICAL):
        response = best_response(hs[0], Profile((uniform, uniform), mode), 0)
        assert abs(response.value) <= 1e-12

    pfg = payoff_operators(make_pfg())
    half = classical_mixture_state([0.5, 0.5], classical_basis(2))
    assert abs(best_response(pfg[0], Profile((half, half), CLASSICAL), 0).value) <= 1e-12


def test_best_response_beats_random_alternatives():

    hs = payoff_operators(make_sfg())
    rng = np.random.default_rng(21)
    opponent = _random_density(rng)
    for mode in (OPERATOR, CLASSICAL):
        if mode == CLASSICAL:
            opponent = classical_mixture_state(rng.dirichlet(np.ones(4)), pauli_basis())
        mine = maximally_mixed_state(pauli_basis())
        value = best_response(hs[0], Profile((mine, opponent), mode), 0).value
        for _ in range(100):
            if mode == CLASSICAL:
                alternative = classical_mixture_state(rng.dirichlet(np.ones(4)), pauli_basis())
            else:
                alternative = _random_density(rng)
            payoff = expected_payoff(joint_state([alternative, opponent]), hs[0])
            assert value >= payoff - 1e-10


def test_exploitability_examples():

    pfg = payoff_operators(make_pfg())
    half = classical_mixture_state([0.5, 0.5], classical_basis(2))
    for mode in (OPERATOR, CLASSICAL):
        assert abs(exploitability(pfg, Profile((half, half), mode))) <= 1e-12

    table = payoff_operators(make_pfg_table())
    table_half = classical_mixture_state([0.5, 0.5], make_pfg_table().basis)
    assert abs(exploitability(table, Profile((table_half, table_half), CLASSICAL))) <= 1e-12

    sfg = payoff_operators(make_sfg())
    uniform = maximally_mixed_state(pauli_basis())
    assert abs(exploitability(sfg, Profile((uniform, uniform), CLASSICAL))) <= 1e-9
    assert exploitability(sfg, Profile((uniform, uniform))) == pytest.approx(1.0)

    identity = _pure(np.eye(2))
    assert exploitability(sfg, Profile((identity, identity), CLASSICAL)) == pytest.approx(2.0)
    assert exploitability(sfg, Profile((identity, identity))) == pytest.approx(3.0)


def test_player_regrets():

    sfg = payoff_operators(make_sfg())
    identity = _pure(np.eye(2))
    df = player_regrets(sfg, Profile((identity, identity), CLASSICAL))
    assert list(df.columns) == ["Player", "Payoff", "Best Response Value", "Regret"]
    assert df["Payoff"].tolist() == pytest.approx([1.0, -1.0])
    assert df["Regret"].tolist() == pytest.approx([0.0, 2.0])


def test_exploitability_scales_with_payoffs():

    rng = np.random.default_rng(30)
    base = payoff_operators(_scaled_sfg(1.0))
    scaled = payoff_operators(_scaled_sfg(2.5))
    for _ in range(10):
        p = Profile((_random_density(rng), _random_density(rng)))
        assert abs(exploitability(scaled, p) - 2.5 * exploitability(base, p)) <= 1e-10
        for i in range(2):
            assert best_response(scaled[i], p, i).value == pytest.approx(2.5 * best_response(base[i], p, i).value)


def test_classical_profiles_reject_superpositions():

    xy = _pure((X + Y) / np.sqrt(2))
    with pytest.raises(ValueError):
        Profile((xy, xy), CLASSICAL)
    with pytest.raises(ValueError):
        Profile((xy, xy), "mixed-unitary")
    with pytest.raises(ValueError):
        Profile(())


def test_solve_pfg_classical():

    report = solve(payoff_operators(make_pfg()), mode=CLASSICAL, eps=1e-3)
    assert report.converged
    assert report.exploitability <= 1e-3
    assert report.payoffs == pytest.approx((0.0, 0.0), abs=1e-3)
    for state in report.profile.states:
        assert np.allclose(state.probabilities(), [0.5, 0.5], atol=1e-3)


def test_solve_sfg_operator_density():

    report = solve(payoff_operators(make_sfg()), mode=OPERATOR, eps=1e-3, max_iters=10000)
    assert report.converged
    assert report.iterations <= 10000
    assert report.exploitability <= 1e-3
    assert abs(report.payoffs[0]) <= 2e-3
    assert len(report.history) == report.iterations


def test_solve_steps_toward_mixtures_of_tied_responses():

    hs = payoff_operators(make_sfg())
    report = solve(hs, max_iters=1)
    assert report.history == pytest.approx((1.0,))
    assert np.allclose(report.profile.states[0].rho, np.eye(4) / 4)
    assert np.linalg.matrix_rank(report.profile.states[1].rho, tol=1e-9) == 4


def test_solve_convergence_matches_the_reported_exploitability():

    hs = payoff_operators(make_sfg())
    report = solve(hs, eps=0.6, max_iters=1)
    assert report.history == pytest.approx((1.0,))
    assert report.exploitability == pytest.approx(0.5)
    assert report.converged

    for max_iters in range(1, 9):
        report = solve(hs, eps=0.3, max_iters=max_iters)
        assert report.converged == (report.exploitability <= report.eps)


def test_solve_with_no_iterations_returns_the_initial_profile():

    hs = payoff_operators(make_sfg())
    report = solve(hs, max_iters=0)
    assert not report.converged
    assert report.iterations == 0
    assert report.history == ()
    for state in report.profile.states:
        assert np.allclose(state.rho, np.eye(4) / 4)
    assert report.exploitability == pytest.approx(1.0)


def test_solve_is_deterministic():

    hs = payoff_operators(make_pfg())
    first = solve(hs, mode=CLASSICAL, max_iters=200, seed=4, initial="random")
    second = solve(hs, mode=CLASSICAL, max_iters=200, seed=4, initial="random")
    assert first.history == second.history
    assert first.payoffs == second.payoffs
    for a, b in zip(first.profile.states, second.profile.states):
        assert np.array_equal(a.rho, b.rho)

    sfg = payoff_operators(make_sfg())
    a = solve(sfg, max_iters=50, seed=7, initial="random")
    b = solve(sfg, max_iters=50, seed=7, initial="random")
    assert a.history == b.history
    assert len(a.history_frame()) == len(a.history)


def test_classical_solve_keeps_states_diagonal():

    hs = payoff_operators(make_sfg())
    report = solve(hs, mode=CLASSICAL, max_iters=300, seed=1, initial="random")
    for state in report.profile.states:
        assert np.count_nonzero(state.rho - np.diag(np.diag(state.rho))) == 0
        assert state.is_diagonal()


def test_solve_accepts_an_initial_profile():

    hs = payoff_operators(make_sfg())
    identity = _pure(np.eye(2))
    start = Profile((identity, identity), CLASSICAL)
    report = solve(hs, mode=CLASSICAL, max_iters=1, initial=start)
    assert report.iterations == 1
    assert report.history == pytest.approx((2.0,))
    with pytest.raises(ValueError):
        solve(hs, mode=OPERATOR, initial=start)


@pytest.mark.parametrize(
    "kwargs",
    [{"eps": 0.0}, {"eps": -1.0}, {"mode": "mixed-unitary"}, {"max_iters": -1}, {"initial": "zero"}],
)
def test_solve_rejects_bad_arguments(kwargs):

    with pytest.raises(ValueError):
        solve(payoff_operators(make_sfg()), **kwargs)


def test_unitary_realizability():

    pauli = pauli_basis()
    report = unitary_realizability(_pure((X + Y) / np.sqrt(2)))
    assert report.status == REALIZABLE
    assert report.realizable
    assert report.rank == 1
    assert report.unitarity_residual <= 1e-9

    report = unitary_realizability(strategy_from_coefficients(np.array([1, 1, 0, 0]) / np.sqrt(2), pauli))
    assert report.status == NOT_REALIZABLE
    assert np.allclose(np.abs(report.operator), np.abs((np.eye(2) + X) / np.sqrt(2)))

    report = unitary_realizability(classical_mixture_state([0.25] * 4, pauli))
    assert report.status == MIXED
    assert report.rank == 4
    assert report.operator is None
