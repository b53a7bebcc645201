"""Tests for jcm_trap.dynamics.
"""
import math

import numpy as np
import pytest

from jcm_trap import constants
from jcm_trap.dressed import dressedness_profile, entropy_floor, from_dressed, to_dressed
from jcm_trap.dynamics import *
from jcm_trap.errors import DomainError
from jcm_trap.states import JointState, coherent_field, eo_state, perfect_trapping_state, product_state, zz_atom
from jcm_trap.states import zz_state

from .test_data import ALPHA, GAMMAS, HALF_MIX, PARAMS, PHASE_DIFFS, SEED, TRAPPING_INVERSION, TRAPPING_Z, random_state
from .test_data import unit_state, xi_for


def padded_state(random: np.random.RandomState, n_max: int) -> JointState:
    """A random state whose top shell is empty, so dressed evolution keeps all of its weight.
    """
    state = random_state(random, n_max)
    return JointState(np.append(state.a, 0.0), np.append(state.b, 0.0))


class TestTimeGrid():
    def test_should_space_a_uniform_grid_evenly(self):
        grid = uniform_grid(10.0, 11)
        assert np.allclose(np.diff(grid.tau), 1.0)
        assert grid.tau[-1] == 10.0

    def test_should_reject_a_decreasing_grid(self):
        with pytest.raises(DomainError):
            TimeGrid([0.0, 2.0, 1.0])

    def test_should_reject_negative_times(self):
        with pytest.raises(DomainError):
            TimeGrid([-1.0, 0.0])

    def test_should_reject_a_single_sample_uniform_grid(self):
        with pytest.raises(DomainError):
            uniform_grid(10.0, 1)


class TestRabiFrequency():
    def test_should_grow_with_the_square_root_of_the_photon_number(self):
        assert rabi_frequency(0) == 2.0
        assert rabi_frequency(3) == 4.0
        assert np.allclose(rabi_frequencies(2), [2.0, 2.0 * math.sqrt(2.0), 2.0 * math.sqrt(3.0)])

    def test_should_reject_negative_photon_numbers(self):
        with pytest.raises(DomainError):
            rabi_frequency(-1)


class TestEvolve():
    def test_should_leave_the_coordinates_unchanged_at_zero_time(self):
        coords = to_dressed(random_state(np.random.RandomState(SEED), 10))
        evolved = evolve(coords, 0.0)
        assert np.array_equal(evolved.phi, coords.phi)
        assert np.array_equal(evolved.chi, coords.chi)
        assert np.array_equal(evolved.theta, coords.theta)

    def test_should_bring_a_shell_back_after_one_rabi_period(self):
        coords = to_dressed(random_state(np.random.RandomState(SEED), 10))
        shell = 3
        evolved = evolve(coords, math.pi / math.sqrt(shell + 1.0))
        gap = np.angle(np.exp(1j * (evolved.phi[shell] - coords.phi[shell])))
        assert abs(gap) < 1e-12

    def test_should_reject_negative_times(self):
        coords = to_dressed(unit_state([1, 0], [0, 0]))
        with pytest.raises(DomainError):
            evolve(coords, -1.0)

    def test_should_match_the_bare_basis_evolution(self):
        random = np.random.RandomState(SEED)
        for tau in (0.0, 0.7, 13.2, 150.0):
            state = padded_state(random, 20)
            dressed = from_dressed(evolve(to_dressed(state), tau))
            bare = evolve_bare(state, tau)
            assert np.allclose(dressed.a, bare.a[:state.n_max + 1], rtol=0.0, atol=1e-12)
            assert np.allclose(dressed.b, bare.b[:state.n_max + 1], rtol=0.0, atol=1e-12)

    def test_should_conserve_the_norm_in_the_bare_basis(self):
        state = random_state(np.random.RandomState(SEED), 30)
        for tau in (0.5, 5.0, 500.0):
            evolved = evolve_bare(state, tau)
            assert evolved.n_max == state.n_max + 1
            assert evolved.norm() == pytest.approx(1.0, abs=1e-12)

    def test_should_keep_the_ground_vacuum_amplitude(self):
        state = random_state(np.random.RandomState(SEED), 6)
        assert evolve_bare(state, 3.0).b[0] == state.b[0]


class TestInversion():
    def test_should_oscillate_at_the_vacuum_rabi_frequency_from_the_excited_vacuum(self):
        state = unit_state([1, 0], [0, 0])
        coords = to_dressed(state)
        for tau in (0.0, 0.3, 1.0, 7.5):
            assert inversion_dressed(coords, tau) == pytest.approx(math.cos(2.0 * tau), abs=1e-14)
            assert inversion_bare(state, tau) == pytest.approx(math.cos(2.0 * tau), abs=1e-14)

    def test_should_stay_at_minus_one_in_the_ground_vacuum(self):
        state = unit_state([0, 0], [1, 0])
        assert inversion_dressed(to_dressed(state), 4.0) == -1.0
        assert inversion_bare(state, 4.0) == -1.0

    def test_should_agree_between_the_dressed_and_bare_formulas(self):
        random = np.random.RandomState(SEED)
        for _ in range(100):
            state = random_state(random, 128)
            coords = to_dressed(state)
            for tau in random.uniform(0.0, 200.0, 50):
                assert abs(inversion_dressed(coords, tau) - inversion_bare(state, tau)) <= 1e-10

    def test_should_freeze_the_perfect_trapping_state(self):
        state = perfect_trapping_state(TRAPPING_Z, None, PARAMS)
        values = series(state, uniform_grid(200.0, 2000)).sigma_z
        assert np.ptp(values) <= 1e-10
        assert abs(np.mean(values) - TRAPPING_INVERSION) <= 1e-10

    def test_should_freeze_trapping_states_with_random_signs(self):
        random = np.random.RandomState(SEED)
        grid = uniform_grid(200.0, 2000)
        for _ in range(20):
            signs = random.choice([-1, 1], size=60)
            values = series(perfect_trapping_state(TRAPPING_Z, signs, PARAMS), grid).sigma_z
            assert np.ptp(values) <= 1e-10
            assert abs(np.mean(values) - TRAPPING_INVERSION) <= 1e-10

    @pytest.mark.parametrize('gamma', GAMMAS)
    @pytest.mark.parametrize('phase_diff', PHASE_DIFFS)
    def test_should_respect_the_trapping_bound(self, gamma, phase_diff):
        state = zz_state(ALPHA, gamma, xi_for(phase_diff), PARAMS)
        profile = dressedness_profile(to_dressed(state))
        values = series(state, uniform_grid(100.0, 2000)).sigma_z
        assert np.all(np.abs(values + profile.w_minus1_sq) <= profile.m + 1e-9)

    def test_should_collapse_and_revive_near_the_revival_time(self):
        state = product_state(zz_atom(0.0, 0.0), coherent_field(ALPHA, PARAMS))
        quiet = series(state, TimeGrid(np.linspace(10.0, 25.0, 3000))).sigma_z
        assert np.max(np.abs(quiet)) < 0.05
        grid = TimeGrid(np.linspace(30.0, 60.0, 6000))
        values = series(state, grid).sigma_z
        peak = grid.tau[np.argmax(np.abs(values))]
        assert 42.0 <= peak <= 46.5


class TestSeries():
    def test_should_be_deterministic(self):
        state = random_state(np.random.RandomState(SEED), 20)
        grid = uniform_grid(50.0, 300)
        assert np.array_equal(series(state, grid).sigma_z, series(state, grid).sigma_z)

    def test_should_accept_a_single_time(self):
        state = unit_state([1, 0], [0, 0])
        values = series(state, TimeGrid([0.0])).sigma_z
        assert values.shape == (1,)
        assert values[0] == pytest.approx(1.0, abs=1e-15)

    def test_should_not_depend_on_the_number_of_workers(self):
        state = random_state(np.random.RandomState(SEED), 20)
        grid = uniform_grid(50.0, 3000)
        serial = series(state, grid, workers=1)
        parallel = series(state, grid, workers=2)
        assert np.array_equal(serial.sigma_z, parallel.sigma_z)

    def test_should_agree_between_dressed_and_bare_series(self):
        state = random_state(np.random.RandomState(SEED), 20)
        grid = uniform_grid(50.0, 300)
        dressed = series(state, grid, constants.EXACT_DRESSED)
        bare = series(state, grid, constants.EXACT_BARE)
        assert bare.label == constants.EXACT_BARE
        assert np.allclose(dressed.sigma_z, bare.sigma_z, rtol=0.0, atol=1e-10)

    def test_should_reject_the_approximate_label(self):
        with pytest.raises(DomainError):
            series(unit_state([1, 0], [0, 0]), TimeGrid([0.0]), constants.APPROX)

    def test_should_reject_exact_values_outside_the_unit_interval(self):
        with pytest.raises(DomainError):
            InversionSeries(TimeGrid([0.0]), [1.5], constants.EXACT_DRESSED)

    def test_should_allow_approximate_values_outside_the_unit_interval(self):
        assert InversionSeries(TimeGrid([0.0]), [1.5], constants.APPROX).sigma_z[0] == 1.5


class TestAtomDensity():
    def test_should_match_the_inversion(self):
        state = random_state(np.random.RandomState(SEED), 15)
        coords = to_dressed(state)
        for tau in (0.0, 2.0, 30.0):
            rho = atom_density(coords, tau)
            assert rho.bloch_vector[2] == pytest.approx(inversion_bare(state, tau), abs=1e-10)

    def test_should_match_the_partial_trace_of_the_evolved_state(self):
        random = np.random.RandomState(SEED)
        for tau in (0.0, 1.3, 27.0):
            state = padded_state(random, 15)
            rho = atom_density(to_dressed(state), tau)
            traced = partial_trace(evolve_bare(state, tau))
            assert abs(rho.rho_eg - traced.rho_eg) <= 1e-10
            assert rho.rho_ee == pytest.approx(traced.rho_ee, abs=1e-10)

    def test_should_keep_the_even_odd_state_incoherent(self):
        state = eo_state(ALPHA, HALF_MIX, 0.0, PARAMS)
        coords = to_dressed(state)
        for tau in (0.0, 10.0, 44.0, 90.0):
            rho = atom_density(coords, tau)
            assert abs(rho.rho_eg) <= 1e-10
            x, y, _ = rho.bloch_vector
            assert abs(x) <= 1e-10 and abs(y) <= 1e-10
            assert abs(field_amplitude(evolve_bare(state, tau))) <= 1e-10

    def test_should_build_the_density_matrix(self):
        rho = AtomDensity(0.25, 0.1j)
        assert np.allclose(rho.matrix(), [[0.25, 0.1j], [-0.1j, 0.75]])
        assert rho.bloch_vector == pytest.approx((0.0, -0.2, -0.5))

    def test_should_give_the_coherent_amplitude(self):
        field = coherent_field(2.0 * np.exp(0.5j), PARAMS)
        state = product_state(zz_atom(0.0, 0.0), field)
        assert field_amplitude(state) == pytest.approx(2.0 * np.exp(0.5j), abs=1e-8)


class TestEntropy():
    def test_should_vanish_for_a_pure_atom(self):
        assert entropy(AtomDensity(1.0, 0.0)) == 0.0
        assert entropy(AtomDensity(0.5, 0.5)) == pytest.approx(0.0, abs=1e-7)

    def test_should_reach_ln_2_for_a_mixed_atom(self):
        assert entropy(AtomDensity(0.5, 0.0)) == pytest.approx(math.log(2.0))

    def test_should_reject_a_non_positive_matrix(self):
        with pytest.raises(DomainError):
            entropy(AtomDensity(0.5, 0.6))

    def test_should_stay_above_the_floor_for_the_even_odd_state(self):
        state = eo_state(ALPHA, HALF_MIX, 0.0, PARAMS)
        coords = to_dressed(state)
        floor = entropy_floor(dressedness_profile(coords).m)
        values = entropy_series(coords, uniform_grid(100.0, 2000))
        assert np.all(values >= floor - 1e-9)
        assert values.min() == pytest.approx(floor, abs=0.01)
