"""Tests for jcm_trap.revival.fresnel.
"""
import math

import numpy as np
import pytest
from scipy import integrate

from jcm_trap.errors import DomainError
from jcm_trap.revival.fresnel import *


def quad_fresnel(x: float, kernel) -> float:
    """√(2/π)∫₀ˣ kernel(y²)dy, summed over short pieces so every piece holds only a few oscillations.
    """
    edges = np.linspace(0.0, x, 201)
    pieces = [integrate.quad(lambda y: kernel(y * y), lo, hi, epsabs=1e-14, epsrel=1e-13)[0]
              for lo, hi in zip(edges[:-1], edges[1:])]
    return math.sqrt(2.0 / math.pi) * math.fsum(pieces)


def asymptotic_error(x: np.ndarray) -> np.ndarray:
    cosine, sine = fresnel(x)
    cosine_asymptotic, sine_asymptotic = fresnel_asymptotic(x)
    return np.hypot(cosine - cosine_asymptotic, sine - sine_asymptotic)


class TestFresnel():
    @pytest.mark.parametrize('x', [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0])
    def test_should_match_direct_quadrature(self, x):
        cosine, sine = fresnel(x)
        assert cosine == pytest.approx(quad_fresnel(x, math.cos), abs=1e-10)
        assert sine == pytest.approx(quad_fresnel(x, math.sin), abs=1e-10)

    def test_should_return_floats_for_a_scalar(self):
        cosine, sine = fresnel(1.0)
        assert isinstance(cosine, float) and isinstance(sine, float)

    def test_should_be_odd(self):
        x = np.linspace(0.1, 20.0, 50)
        cosine, sine = fresnel(x)
        cosine_negative, sine_negative = fresnel(-x)
        assert np.allclose(cosine_negative, -cosine, rtol=0.0, atol=1e-15)
        assert np.allclose(sine_negative, -sine, rtol=0.0, atol=1e-15)

    def test_should_vanish_at_zero(self):
        assert fresnel(0.0) == (0.0, 0.0)

    def test_should_tend_to_one_half(self):
        cosine, sine = fresnel(1e4)
        assert cosine == pytest.approx(0.5, abs=1e-4)
        assert sine == pytest.approx(0.5, abs=1e-4)


class TestFresnelAsymptotic():
    def test_should_improve_with_the_argument(self):
        errors = asymptotic_error(np.array([10.0, 20.0, 40.0]))
        assert errors[0] > errors[1] > errors[2]

    def test_should_stay_below_the_inverse_square(self):
        x = np.linspace(2.0, 50.0, 200)
        assert np.all(asymptotic_error(x) < 1.0 / x**2)

    def test_should_lose_accuracy_as_the_inverse_cube(self):
        x = np.geomspace(5.0, 50.0, 40)
        slope = np.polyfit(np.log(x), np.log(asymptotic_error(x)), 1)[0]
        assert -3.2 <= slope <= -2.8

    def test_should_reject_non_positive_arguments(self):
        with pytest.raises(DomainError):
            fresnel_asymptotic(0.0)
        with pytest.raises(DomainError):
            fresnel_asymptotic(np.array([1.0, -2.0]))
