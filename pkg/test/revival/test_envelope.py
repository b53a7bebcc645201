"""Tests for jcm_trap.revival.envelope.
"""
import math

import numpy as np
import pytest
from scipy import optimize, stats

from jcm_trap.dressed import DressednessProfile, ZZParams, dressedness_profile, to_dressed, zz_coords, zz_profile
from jcm_trap.errors import DomainError, UnwrapError
from jcm_trap.revival.envelope import *
from jcm_trap.states import eo_state

from ..test_data import ALPHA, HALF_MIX, PARAMS, xi_for

QUARTER_TURN_XI = xi_for(math.pi / 2.0)


def zz_envelope(gamma: float, xi: float, mode: str) -> tuple:
    coords = zz_coords(ALPHA, gamma, xi, PARAMS)
    profile = dressedness_profile(coords)
    return interp_envelope(profile, coords.phi, mode, ZZParams(ALPHA, gamma, xi)), profile, coords


class TestEnvelopeFn():
    def test_should_reject_a_stride_other_than_one_or_two(self):
        with pytest.raises(DomainError):
            EnvelopeFn(lambda x: x, (0.0, 1.0), stride=3)

    def test_should_reject_an_inverted_support(self):
        with pytest.raises(DomainError):
            EnvelopeFn(lambda x: x, (2.0, 1.0))

    def test_should_vanish_outside_the_support(self):
        envelope = EnvelopeFn(lambda x: np.full(x.shape, 1j), (1.0, 2.0))
        values = envelope.complex([0.5, 1.5, 2.5])
        assert values.tolist() == [0j, 1j, 0j]
        assert envelope.D(1.5) == 1.0
        assert envelope.phi0(1.5) == pytest.approx(math.pi / 2.0)
        assert envelope.d1(1.5) == 0.0
        assert envelope.d2(1.5) == 1.0


class TestClosedForm():
    def test_should_reduce_to_the_photon_distribution_for_an_excited_atom(self):
        envelope, profile, _ = zz_envelope(0.0, 0.0, 'loggamma')
        n = np.arange(profile.D.size, dtype=float)
        lo, hi = envelope.support
        inside = (n >= lo) & (n <= hi)
        expected = stats.poisson.pmf(n[inside], ALPHA**2)
        assert np.allclose(envelope.D(n[inside]), expected, rtol=1e-10, atol=1e-15)
        assert np.allclose(envelope.d2(n[inside]), 0.0)

    def test_should_pass_through_the_profile(self):
        for phase_diff in (0.0, math.pi / 4.0, math.pi / 2.0):
            envelope, profile, _ = zz_envelope(HALF_MIX, xi_for(phase_diff), 'loggamma')
            n = np.arange(profile.D.size, dtype=float)
            lo, hi = envelope.support
            inside = (n >= lo) & (n <= hi)
            assert np.allclose(envelope.D(n[inside]), profile.D[inside], rtol=0.0, atol=1e-12)

    def test_should_balance_the_gaussian_weights_half_a_shell_below_the_mean(self):
        envelope, _, _ = zz_envelope(HALF_MIX, 0.0, 'gaussian')
        root = optimize.brentq(lambda x: float(envelope.d1(x)), 45.0, 52.0, xtol=1e-12)
        assert root == pytest.approx(48.5, abs=1e-8)

    def test_should_approximate_the_gamma_function_form_with_gaussians(self):
        loggamma, _, _ = zz_envelope(HALF_MIX, QUARTER_TURN_XI, 'loggamma')
        gaussian, _, _ = zz_envelope(HALF_MIX, QUARTER_TURN_XI, 'gaussian')
        x = np.linspace(30.0, 70.0, 401)
        assert np.max(np.abs(loggamma.D(x) - gaussian.D(x))) < 0.005

    def test_should_reject_parameters_that_do_not_describe_the_profile(self):
        coords = zz_coords(ALPHA, HALF_MIX, 0.0, PARAMS)
        with pytest.raises(DomainError):
            interp_envelope(dressedness_profile(coords), coords.phi, 'loggamma', ZZParams(6.0, HALF_MIX, 0.0))

    def test_should_need_the_closed_form_parameters(self):
        coords = zz_coords(ALPHA, HALF_MIX, 0.0, PARAMS)
        with pytest.raises(DomainError):
            interp_envelope(dressedness_profile(coords), coords.phi, 'loggamma')

    def test_should_reject_an_unknown_mode(self):
        coords = zz_coords(ALPHA, HALF_MIX, 0.0, PARAMS)
        with pytest.raises(DomainError):
            interp_envelope(dressedness_profile(coords), coords.phi, 'spline', ZZParams(ALPHA, HALF_MIX, 0.0))

    def test_should_reject_the_gaussian_form_without_photons(self):
        with pytest.raises(DomainError):
            interp_envelope(zz_profile(0.0, HALF_MIX, 0.0), np.zeros(2), 'gaussian', ZZParams(0.0, HALF_MIX, 0.0))


class TestSampled():
    def test_should_interpolate_through_the_samples(self):
        envelope, profile, coords = zz_envelope(HALF_MIX, QUARTER_TURN_XI, 'sampled')
        n = np.arange(35, 64, dtype=float)
        assert np.allclose(envelope.D(n), profile.D[35:64], rtol=0.0, atol=1e-15)
        gap = np.angle(np.exp(1j * (envelope.phi0(n) - coords.phi[35:64])))
        assert np.allclose(gap, 0.0, atol=1e-12)

    def test_should_follow_the_closed_form_between_shells(self):
        sampled, _, _ = zz_envelope(HALF_MIX, QUARTER_TURN_XI, 'sampled')
        loggamma, _, _ = zz_envelope(HALF_MIX, QUARTER_TURN_XI, 'loggamma')
        x = np.arange(35.5, 63.0, 1.0)
        assert np.max(np.abs(sampled.complex(x) - loggamma.complex(x))) < 2e-3

    def test_should_refuse_a_profile_that_vanishes_on_the_odd_shells(self):
        coords = to_dressed(eo_state(ALPHA, HALF_MIX, math.pi / 2.0, PARAMS))
        with pytest.raises(UnwrapError):
            interp_envelope(dressedness_profile(coords), coords.phi, 'sampled')

    def test_should_refuse_a_phase_step_beyond_a_quarter_turn(self):
        profile = DressednessProfile([0.25, 0.25, 0.25, 0.25])
        with pytest.raises(UnwrapError):
            interp_envelope(profile, np.array([0.0, 0.1, 2.1, 2.2]), 'sampled')

    def test_should_accept_phase_steps_below_a_quarter_turn(self):
        profile = DressednessProfile([0.25, 0.25, 0.25, 0.25])
        envelope = interp_envelope(profile, np.array([0.0, 1.0, 2.0, 3.0]), 'sampled')
        assert envelope.phi0(2.0) == pytest.approx(2.0)

    def test_should_need_one_phase_per_shell(self):
        coords = zz_coords(ALPHA, HALF_MIX, 0.0, PARAMS)
        with pytest.raises(DomainError):
            interp_envelope(dressedness_profile(coords), coords.phi[:-1], 'sampled')

    def test_should_give_a_zero_envelope_for_a_trapped_profile(self):
        envelope = interp_envelope(DressednessProfile([0.0, 0.0, 0.0]), np.zeros(3), 'sampled')
        assert envelope.support == (0.0, 0.0)
        assert envelope.D(0.0) == 0.0


class TestEvenEnvelope():
    @pytest.mark.parametrize('mode', ['sampled', 'loggamma'])
    def test_should_pass_through_the_even_shells(self, mode):
        xi = math.pi / 2.0
        coords = to_dressed(eo_state(ALPHA, HALF_MIX, xi, PARAMS))
        profile = dressedness_profile(coords)
        envelope = even_envelope(profile, coords.phi, mode, ZZParams(ALPHA, HALF_MIX, xi))
        assert envelope.stride == 2
        m = np.arange(15, 35, dtype=float)
        assert np.allclose(envelope.D(m), profile.D[30:70:2], rtol=0.0, atol=1e-12)

    def test_should_carry_the_even_odd_phase(self):
        coords = to_dressed(eo_state(ALPHA, HALF_MIX, 0.0, PARAMS))
        envelope = even_envelope(dressedness_profile(coords), coords.phi, 'loggamma', ZZParams(ALPHA, HALF_MIX, 0.0))
        assert np.allclose(envelope.d2(np.arange(15, 35, dtype=float)), 0.0, atol=1e-15)
