"""The inversion split by Poisson summation into a collapse term and revival terms, each revival evaluated at its
stationary-phase point.

For a stride s (n = s·x) the k-th revival pair reads

    D(x_k) τ√s/(π√(2|k|³)) cos(φ(x_k) - sτ²/(2π|k|) - 2π|k|/s + π/4),   s·x_k + 1 = s²τ²/(4π²k²)

@since 0.1.0
"""

import math
from typing import Any, Callable

import numpy as np
from scipy import integrate

from .. import constants
from ..dynamics import InversionSeries, TimeGrid
from ..errors import DomainError, QuadratureError
from ..logger import info
from .envelope import EnvelopeFn


def check_poisson_index(k: int):
    if int(k) != k or k == 0:
        raise DomainError("The Poisson index k must be a nonzero integer: the phase is stationary everywhere at k = 0")
# End of check_poisson_index()


def _scalar_or_array(values: np.ndarray, like: Any) -> Any:
    return float(values) if np.ndim(like) == 0 else values
# End of _scalar_or_array()


def stationary_point(k: int, tau: Any, stride: int = 1) -> Any:
    """The shell variable x_k at which the k-th revival phase is stationary, s·x_k + 1 = s²τ²/(4π²k²).

    Params:
    - k (int): The nonzero Poisson index
    - tau (float or np.ndarray): Scaled time(s)
    - stride (int): 1, or 2 for even shells renumbered by m

    Return:
    - x_k (float or np.ndarray): The stationary point(s); negative values lie outside every envelope

    Raises:
    - DomainError: for k = 0
    """
    check_poisson_index(k)
    tau = np.asarray(tau, dtype=float)
    point = ((stride * tau)**2 / (4.0 * math.pi**2 * k**2) - 1.0) / stride
    return _scalar_or_array(point, tau)
# End of stationary_point()


def _pair_amplitude(k: int, tau: np.ndarray, stride: int) -> np.ndarray:
    return tau * math.sqrt(stride) / (math.pi * math.sqrt(2.0 * abs(k)**3))
# End of _pair_amplitude()


def _inside(env: EnvelopeFn, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
    lo, hi = env.support
    return (tau > 0) & (x >= lo) & (x <= hi)
# End of _inside()


def revival_term(k: int, tau: Any, env: EnvelopeFn) -> Any:
    """Half of the k-th stationary-phase revival pair; revival_term(k) + revival_term(-k) is the full revival.
    Zero wherever the stationary point falls outside the envelope support.

    Params:
    - k (int): The nonzero Poisson index
    - tau (float or np.ndarray): Scaled time(s)
    - env (EnvelopeFn): The envelope, whose stride selects the standard or even-odd form

    Return:
    - term (float or np.ndarray): The term at each time
    """
    values = np.asarray(tau, dtype=float)
    stride = env.stride
    x = np.atleast_1d(stationary_point(k, values, stride))
    flat = np.atleast_1d(values)
    term = np.zeros(flat.shape)
    inside = _inside(env, x, flat)
    if np.any(inside):
        xs, taus = x[inside], flat[inside]
        phase = env.phi0(xs) - stride * taus**2 / (constants.TWO_PI * abs(k)) - constants.TWO_PI * abs(k) / stride \
            + math.pi / 4.0
        term[inside] = 0.5 * env.D(xs) * _pair_amplitude(k, taus, stride) * np.cos(phase)
    return _scalar_or_array(term.reshape(values.shape), tau)
# End of revival_term()


def revival_term_eo(k: int, tau: Any, env_even: EnvelopeFn) -> Any:
    """revival_term for an envelope over even shells renumbered by m.

    Raises:
    - DomainError: unless env_even has stride 2
    """
    if env_even.stride != 2:
        raise DomainError("The even-odd revival needs a stride-2 envelope, see even_envelope")
    return revival_term(k, tau, env_even)
# End of revival_term_eo()


def revival_envelope(k: int, tau: Any, env: EnvelopeFn) -> Any:
    """The non-oscillating magnitude D(x_k) τ√s/(π√(2|k|³)) of the k-th revival pair.
    """
    values = np.asarray(tau, dtype=float)
    x = np.atleast_1d(stationary_point(k, values, env.stride))
    flat = np.atleast_1d(values)
    magnitude = np.zeros(flat.shape)
    inside = _inside(env, x, flat)
    if np.any(inside):
        magnitude[inside] = env.D(x[inside]) * _pair_amplitude(k, flat[inside], env.stride)
    return _scalar_or_array(magnitude.reshape(values.shape), tau)
# End of revival_envelope()


def fleischhauer_schleich(k: int, tau: Any, photon_distribution: Callable) -> Any:
    """Closed-form k-th revival of an atom starting in |g> next to a field with a smooth photon distribution P:

        -P(τ²/(4π²k²)) τ/(π√(2|k|³)) cos(τ²/(2π|k|) - π/4)

    Params:
    - k (int): The nonzero Poisson index
    - tau (float or np.ndarray): Scaled time(s)
    - photon_distribution (callable): Continuous n -> P(n)

    Return:
    - revival (float or np.ndarray): The full revival pair, zero where τ²/(4π²k²) < 1
    """
    check_poisson_index(k)
    values = np.atleast_1d(np.asarray(tau, dtype=float))
    photons = values**2 / (4.0 * math.pi**2 * k**2)
    revival = np.zeros(values.shape)
    inside = photons >= 1.0
    if np.any(inside):
        taus = values[inside]
        revival[inside] = -photon_distribution(photons[inside]) * _pair_amplitude(k, taus, 1) \
            * np.cos(taus**2 / (constants.TWO_PI * abs(k)) - math.pi / 4.0)
    return _scalar_or_array(revival.reshape(np.shape(tau)), tau)
# End of fleischhauer_schleich()


def _weighted_quad(integrand: Callable, bounds: tuple, weight: str, frequency: float, abs_tolerance: float,
                   limit: int, fail_tolerance: float) -> float:
    """∫ integrand(u) weight(frequency·u) du over bounds, with QUADPACK's oscillatory rules.

    Raises:
    - QuadratureError: if the achieved error estimate exceeds fail_tolerance
    """
    if frequency == 0.0:
        if weight == 'sin':
            return 0.0
        result = integrate.quad(integrand, *bounds, epsabs=abs_tolerance, limit=limit, full_output=1)
    else:
        result = integrate.quad(integrand, *bounds, weight=weight, wvar=frequency, epsabs=abs_tolerance,
                                limit=limit, full_output=1)
    value, error_estimate = result[0], result[1]
    if not math.isfinite(value) or error_estimate > fail_tolerance:
        raise QuadratureError("The collapse integral did not converge at frequency {}".format(frequency),
                              error_estimate)
    return value
# End of _weighted_quad()


def collapse_term(tau: float, env: EnvelopeFn, w_minus1_sq: float = None, D0: float = None, phi00: float = None,
                  abs_tolerance: float = constants.QUAD_ABS_TOLERANCE, limit: int = constants.QUAD_LIMIT,
                  fail_tolerance: float = constants.QUAD_FAIL_TOLERANCE) -> float:
    """The k = 0 part of the Poisson sum, ½D(0) cos(φ(0) - 2τ) - w_{-1}² + ∫ D(x) cos(φ(x) - 2τ√(s x + 1)) dx.

    With u = √(s x + 1) the Rabi phase becomes linear in u and the integral splits into
    ∫ [D1 cos 2τu + D2 sin 2τu] (2u/s) du, evaluated over the envelope support.

    Params:
    - tau (float): Scaled time >= 0
    - env (EnvelopeFn): The envelope
    - w_minus1_sq (float): The steady offset (default: env.w_minus1_sq)
    - D0, phi00 (float): D(0) and φ(0) (default: read off the envelope)
    - abs_tolerance (float): Absolute tolerance requested from the integrator
    - limit (int): Maximum number of subintervals
    - fail_tolerance (float): Error estimate above which the result is rejected

    Return:
    - value (float): The collapse term

    Raises:
    - QuadratureError: if the integral does not converge
    """
    if tau < 0:
        raise DomainError("Scaled time must be >= 0, got {}".format(tau))
    origin = complex(env.complex(np.zeros(1))[0])
    if w_minus1_sq is None:
        w_minus1_sq = env.w_minus1_sq
    if D0 is None:
        D0 = abs(origin)
    if phi00 is None:
        phi00 = math.atan2(origin.imag, origin.real)
    stride = env.stride
    lo, hi = env.support
    bounds = (math.sqrt(stride * lo + 1.0), math.sqrt(stride * hi + 1.0))
    value = 0.5 * D0 * math.cos(phi00 - 2.0 * tau) - w_minus1_sq
    if bounds[1] <= bounds[0]:
        return value

    def in_phase(u: float) -> float:
        return float(env.d1(np.array([(u * u - 1.0) / stride]))[0]) * 2.0 * u / stride
    # End of in_phase()

    def quadrature(u: float) -> float:
        return float(env.d2(np.array([(u * u - 1.0) / stride]))[0]) * 2.0 * u / stride
    # End of quadrature()

    frequency = 2.0 * tau
    value += _weighted_quad(in_phase, bounds, 'cos', frequency, abs_tolerance, limit, fail_tolerance)
    value += _weighted_quad(quadrature, bounds, 'sin', frequency, abs_tolerance, limit, fail_tolerance)
    return value
# End of collapse_term()


def _check_parity(env: EnvelopeFn, parity: str):
    expected = {None: env.stride, 'standard': 1, 'even_odd': 2}.get(parity)
    if expected is None:
        raise DomainError("Parity must be 'standard' or 'even_odd', got {}".format(parity))
    if expected != env.stride:
        raise DomainError("A {} evaluation needs an envelope of stride {}".format(parity, expected))
# End of _check_parity()


def revival_sum(tau: Any, env: EnvelopeFn, k_max: int = constants.K_MAX) -> Any:
    """Σ_{k=1..k_max} [revival_term(k) + revival_term(-k)].
    """
    if k_max < 1:
        raise DomainError("k_max must be >= 1, got {}".format(k_max))
    return sum(revival_term(k, tau, env) + revival_term(-k, tau, env) for k in range(1, k_max + 1))
# End of revival_sum()


def approx_inversion(tau: float, env: EnvelopeFn, k_max: int = constants.K_MAX, parity: str = None,
                     **quad_options) -> float:
    """The stationary-phase inversion, collapse_term plus the first k_max revival pairs.

    Params:
    - tau (float): Scaled time >= 0
    - env (EnvelopeFn): The envelope
    - k_max (int): The number of revivals kept
    - parity (str): 'standard' or 'even_odd'; checked against the envelope stride when given
    - quad_options: abs_tolerance, limit and fail_tolerance, passed on to collapse_term

    Return:
    - sigma_z (float): The approximate inversion

    Raises:
    - DomainError: for k_max < 1 or a parity that does not match the envelope
    - QuadratureError: if the collapse integral does not converge
    """
    _check_parity(env, parity)
    return float(revival_sum(tau, env, k_max)) + collapse_term(tau, env, **quad_options)
# End of approx_inversion()


@info('Computing an approximate inversion series')
def approx_series(grid: TimeGrid, env: EnvelopeFn, k_max: int = constants.K_MAX, **quad_options) -> InversionSeries:
    """approx_inversion at every grid time.

    Return:
    - series (InversionSeries): The approximate inversion, labelled 'approx'
    """
    revivals = revival_sum(grid.tau, env, k_max)
    collapse = np.array([collapse_term(tau, env, **quad_options) for tau in grid.tau])
    return InversionSeries(grid, revivals + collapse, constants.APPROX)
# End of approx_series()


def k_window(tau: Any, env: EnvelopeFn, k_max: int = constants.K_MAX) -> np.ndarray:
    """Return:
    - k (np.ndarray): At each time, the revival index with the largest envelope, or 0 where none is active
    """
    tau = np.atleast_1d(np.asarray(tau, dtype=float))
    envelopes = np.array([revival_envelope(k, tau, env) for k in range(1, k_max + 1)])
    return np.where(np.max(envelopes, axis=0) > 0.0, np.argmax(envelopes, axis=0) + 1, 0)
# End of k_window()


def revival_center(k: int, mean_n: float, stride: int = 1) -> tuple:
    """The two customary estimates (2π|k|/s)√<n> and (2π|k|/s)√(<n>+1) of the k-th revival time.

    Params:
    - k (int): The nonzero Poisson index
    - mean_n (float): Mean photon number, in physical shells
    - stride (int): 1, or 2 for even-odd states

    Return:
    - centers (tuple): Both estimates
    """
    check_poisson_index(k)
    scale = constants.TWO_PI * abs(k) / stride
    return scale * math.sqrt(max(mean_n, 0.0)), scale * math.sqrt(mean_n + 1.0)
# End of revival_center()
