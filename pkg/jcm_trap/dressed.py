"""Dressed-state coordinates: the transform between bare amplitudes and the (w, θ, χ, φ) shell parametrization,
the weighted-dressedness distribution D_n with its trapping bound M, closed-form coordinates for an atomic
superposition times a coherent field, and the entropy floor implied by M.

@since 0.1.0
"""

import math
from collections import namedtuple
from typing import Any

import numpy as np
from scipy import special

from . import constants
from .errors import DomainError
from .logger import debug
from .states import JointState, ModelParams, check_zz_angles, log_poisson, poisson_truncation, zz_state
from .utils import compensated_sum, wrap_angle


ZZParams = namedtuple('ZZParams', ['alpha', 'gamma', 'xi'])


class DressedCoordinates(namedtuple('DressedCoordinates', ['w_minus1', 'w', 'theta', 'chi', 'phi', 'b0_phase'])):
    """A pure state written shell by shell in the dressed basis |n±> = (|e,n> ± |g,n+1>)/√2:

        <n+|Ψ> = w_n e^{iχ_n} cos(θ_n/2),   <n-|Ψ> = w_n e^{i(χ_n - φ_n)} sin(θ_n/2),   <g,0|Ψ> = w_{-1} e^{iβ}

    Shells run over n = 0..n_max. The top shell pairs a_{n_max} with b_{n_max+1}, which lies outside a truncated
    bare state and reads as 0 there.

    Instance Variables:
    - w_minus1 (float): Weight of |g,0>
    - w (np.ndarray): Shell weights w_n >= 0
    - theta (np.ndarray): Dressedness angles in [0, π]
    - chi (np.ndarray): Global shell phases in [0, 2π)
    - phi (np.ndarray): Relative shell phases in [0, 2π)
    - b0_phase (float): The phase β of <g,0|Ψ>, kept for lossless round trips
    """
    __slots__ = ()

    def __new__(cls, w_minus1: float, w: Any, theta: Any, chi: Any, phi: Any, b0_phase: float = 0.0):
        arrays = [np.array(values, dtype=float) for values in (w, theta, chi, phi)]
        for array in arrays:
            array.flags.writeable = False
        w, theta, chi, phi = arrays
        if w.ndim != 1 or w.size < 1 or any(array.shape != w.shape for array in arrays):
            raise DomainError("Dressed coordinate arrays must be 1D and of equal length")
        if w_minus1 < 0 or np.any(w < 0):
            raise DomainError("Dressed weights must be non-negative")
        if np.any(theta < 0) or np.any(theta > math.pi):
            raise DomainError("Dressedness angles must lie in [0, pi]")
        norm = w_minus1**2 + compensated_sum(w**2)
        if abs(norm - 1.0) > constants.NORM_TOLERANCE:
            raise DomainError("Dressed coordinates are not normalized: norm = {}".format(norm))
        return super().__new__(cls, float(w_minus1), w, theta, chi, phi, float(b0_phase))
    # End of __new__()

    @property
    def n_max(self) -> int:
        return self.w.size - 1
    # End of n_max()

    def D(self) -> np.ndarray:
        """Return:
        - D (np.ndarray): The weighted dressedness w_n² sin θ_n of every shell
        """
        return np.maximum(self.w**2 * np.sin(self.theta), 0.0)
    # End of D()
# End of DressedCoordinates()


class DressednessProfile(namedtuple('DressednessProfile', ['D', 'm', 'w_minus1_sq'])):
    """The weighted-dressedness distribution and the bound it puts on the inversion,
    |<σ_z(τ)> + w_{-1}²| <= m for all τ.

    Instance Variables:
    - D (np.ndarray): D_n = w_n² sin θ_n >= 0
    - m (float): The trapping bound M = Σ D_n, in [0, 1]
    - w_minus1_sq (float): The steady offset w_{-1}²
    """
    __slots__ = ()

    def __new__(cls, D: Any, m: float = None, w_minus1_sq: float = 0.0):
        D = np.array(D, dtype=float)
        D.flags.writeable = False
        if D.ndim != 1 or np.any(D < 0):
            raise DomainError("The weighted dressedness must be a 1D non-negative array")
        if m is None:
            m = compensated_sum(D)
        if not 0.0 <= m <= 1.0 + constants.BOUND_SLACK:
            raise DomainError("The trapping bound must lie in [0, 1], got {}".format(m))
        return super().__new__(cls, D, float(min(m, 1.0)), float(w_minus1_sq))
    # End of __new__()

    def mean(self) -> float:
        """Return:
        - mean (float): The D-weighted mean shell index (0 when D vanishes)
        """
        if self.m <= 0.0:
            return 0.0
        return compensated_sum(np.arange(self.D.size) * self.D) / compensated_sum(self.D)
    # End of mean()

    def sigma(self) -> float:
        """Return:
        - sigma (float): The D-weighted standard deviation of the shell index (0 when D vanishes)
        """
        if self.m <= 0.0:
            return 0.0
        n = np.arange(self.D.size)
        variance = compensated_sum((n - self.mean())**2 * self.D) / compensated_sum(self.D)
        return math.sqrt(max(variance, 0.0))
    # End of sigma()
# End of DressednessProfile()


def _zero_degenerate(w: np.ndarray, *angles: np.ndarray) -> list:
    """Sets every angle to 0 on shells whose weight is below the degeneracy threshold.
    """
    degenerate = w < constants.DEGENERACY_THRESHOLD
    return [np.where(degenerate, 0.0, angle) for angle in angles]
# End of _zero_degenerate()


def _shell_amplitudes(state: JointState) -> tuple:
    """Projects each shell onto |n+> and |n->.

    Return:
    - plus, minus (np.ndarray, np.ndarray): <n+|Ψ> and <n-|Ψ> for n = 0..n_max
    """
    b_next = np.append(state.b[1:], 0.0)
    return (state.a + b_next) / constants.SQRT_TWO, (state.a - b_next) / constants.SQRT_TWO
# End of _shell_amplitudes()


@debug()
def to_dressed(state: JointState) -> DressedCoordinates:
    """Computes the dressed-state coordinates of a bare-basis state.

    Params:
    - state (JointState): The normalized state

    Return:
    - coords (DressedCoordinates): The coordinates. Shells lighter than the degeneracy threshold get zero angles
    """
    plus, minus = _shell_amplitudes(state)
    plus_abs, minus_abs = np.abs(plus), np.abs(minus)
    w = np.hypot(plus_abs, minus_abs)
    theta = 2.0 * np.arctan2(minus_abs, plus_abs)
    chi = wrap_angle(np.angle(plus))
    phi = wrap_angle(np.angle(plus) - np.angle(minus))
    theta, chi, phi = _zero_degenerate(w, theta, chi, phi)
    b0 = state.b[0]
    b0_phase = float(wrap_angle(np.angle(b0))) if abs(b0) >= constants.DEGENERACY_THRESHOLD else 0.0
    return DressedCoordinates(abs(b0), w, theta, chi, phi, b0_phase)
# End of to_dressed()


@debug()
def from_dressed(coords: DressedCoordinates) -> JointState:
    """Rebuilds bare amplitudes from dressed coordinates. When the top shell puts weight on b_{n_max+1}, the
    state comes back one photon longer (with a_{n_max+1} = 0) so no weight is lost.

    Params:
    - coords (DressedCoordinates): The coordinates

    Return:
    - state (JointState): The bare-basis state, truncated at n_max or n_max + 1
    """
    plus = coords.w * np.exp(1j * coords.chi) * np.cos(0.5 * coords.theta)
    minus = coords.w * np.exp(1j * (coords.chi - coords.phi)) * np.sin(0.5 * coords.theta)
    a = (plus + minus) / constants.SQRT_TWO
    b_next = (plus - minus) / constants.SQRT_TWO
    b0 = coords.w_minus1 * np.exp(1j * coords.b0_phase)
    if a.size < 2 or abs(b_next[-1]) > constants.DEGENERACY_THRESHOLD:
        return JointState(np.append(a, 0.0), np.concatenate(([b0], b_next)))
    return JointState(a, np.concatenate(([b0], b_next[:-1])))
# End of from_dressed()


def dressedness_profile(coords: DressedCoordinates) -> DressednessProfile:
    """Computes D_n = w_n² sin θ_n, the bound M = Σ D_n and the offset w_{-1}².

    Params:
    - coords (DressedCoordinates): The coordinates

    Return:
    - profile (DressednessProfile): The weighted dressedness distribution
    """
    return DressednessProfile(coords.D(), None, coords.w_minus1**2)
# End of dressedness_profile()


def dressedness_minimum(coords: DressedCoordinates, zz: ZZParams = None) -> tuple:
    """Locates the most dressed shell, the integer n minimizing sin θ_n over non-degenerate shells.

    Params:
    - coords (DressedCoordinates): The coordinates
    - zz (ZZParams): If given, the continuous estimate |α|² tan²γ - 1 is reported alongside

    Return:
    - n_min (int): The integer argmin of sin θ_n
    - estimate (float or None): The continuous estimate, if zz was given
    """
    sin_theta = np.where(coords.w >= constants.DEGENERACY_THRESHOLD, np.sin(coords.theta), np.inf)
    n_min = int(np.argmin(sin_theta))
    estimate = None
    if zz is not None:
        estimate = abs(zz.alpha)**2 * math.tan(zz.gamma)**2 - 1.0 if zz.gamma < math.pi / 2.0 else math.inf
    return n_min, estimate
# End of dressedness_minimum()


def _zz_factors(alpha: complex, gamma: float, xi: float, n: np.ndarray) -> tuple:
    """Shared pieces of the closed-form coordinates of cos γ|e> + e^{-iξ} sin γ|g> times |α>.

    Return:
    - log_scale (np.ndarray): ln(e^{-|α|²}|α|^{2n}/(n+1)!)
    - excited (np.ndarray): (n+1) cos²γ
    - ground (float): |α|² sin²γ
    - cross (np.ndarray): |α|√(n+1) sin 2γ / 2, the shared cross term
    - delta (float): ν_α - ξ
    """
    mean = abs(alpha)**2
    log_scale = -mean + special.xlogy(n, mean) - special.gammaln(n + 2.0)
    excited = (n + 1.0) * math.cos(gamma)**2
    ground = mean * math.sin(gamma)**2
    cross = abs(alpha) * np.sqrt(n + 1.0) * math.sin(gamma) * math.cos(gamma)
    return log_scale, excited, ground, cross, np.angle(alpha) - xi
# End of _zz_factors()


@debug()
def zz_coords(alpha: complex, gamma: float, xi: float, params: ModelParams) -> DressedCoordinates:
    """Closed-form dressed coordinates of cos γ|e> + e^{-iξ} sin γ|g> times the coherent field |α>, on the same
    truncation as coherent_field. The shell phases χ_n have no closed form and are read off the expanded state.

    Params:
    - alpha (complex): The coherent amplitude, ν_α = arg α
    - gamma (float): Mixing angle in [0, π/2]
    - xi (float): Atomic phase in [0, 2π)
    - params (ModelParams): Truncation settings

    Return:
    - coords (DressedCoordinates): The coordinates

    Raises:
    - DomainError: on out-of-range angles
    """
    check_zz_angles(gamma, xi)
    mean = abs(alpha)**2
    n = np.arange(poisson_truncation(mean, params) + 1, dtype=float)
    log_scale, excited, ground, cross, delta = _zz_factors(alpha, gamma, xi, n)
    denominator = excited + ground
    with np.errstate(divide='ignore'):
        w = np.exp(0.5 * (log_scale + np.log(denominator)))
    safe = np.where(denominator > 0.0, denominator, 1.0)
    sin_theta = np.abs(excited - ground * np.exp(2j * delta)) / safe
    cos_theta = 2.0 * cross * math.cos(delta) / safe
    theta = np.arctan2(sin_theta, cos_theta)
    phi = wrap_angle(np.arctan2(2.0 * cross * math.sin(delta), excited - ground))
    plus, _ = _shell_amplitudes(zz_state(alpha, gamma, xi, params))
    chi = wrap_angle(np.angle(plus))
    theta, chi, phi = _zero_degenerate(w, theta, chi, phi)
    w_minus1 = math.exp(-0.5 * mean) * math.sin(gamma)
    b0_phase = float(wrap_angle(-xi)) if w_minus1 >= constants.DEGENERACY_THRESHOLD else 0.0
    return DressedCoordinates(w_minus1, w, theta, chi, phi, b0_phase)
# End of zz_coords()


def zz_quadratures(alpha: complex, gamma: float, xi: float, n: Any) -> tuple:
    """The two weights of the closed-form distribution, and its in-phase and quadrature parts:

        Q1 = e^{-|α|²}|α|^{2n}/n! cos²γ,   Q2 = e^{-|α|²}|α|^{2(n+1)}/(n+1)! sin²γ
        D1 = Q1 - Q2 = D cos φ,            D2 = 2√(Q1 Q2) sin(ν_α - ξ) = D sin φ

    The factorials are continued through the Gamma function, so n may be any real >= 0.

    Return:
    - q1, q2, d1, d2 (np.ndarray): The four quantities, evaluated at n
    """
    n = np.asarray(n, dtype=float)
    mean = abs(alpha)**2
    with np.errstate(divide='ignore'):
        q1 = np.exp(log_poisson(n, mean) + np.log(math.cos(gamma)**2))
        q2 = np.exp(log_poisson(n + 1.0, mean) + np.log(math.sin(gamma)**2))
    d2 = 2.0 * np.sqrt(q1 * q2) * math.sin(np.angle(alpha) - xi)
    return q1, q2, q1 - q2, d2
# End of zz_quadratures()


@debug()
def zz_profile(alpha: complex, gamma: float, xi: float, params: ModelParams = None) -> DressednessProfile:
    """The closed-form weighted dressedness D_n = √(Q1² + Q2² - 2 Q1 Q2 cos 2(ν_α - ξ)) on the coherent_field
    truncation.

    Params:
    - alpha (complex): The coherent amplitude
    - gamma (float): Mixing angle in [0, π/2]
    - xi (float): Atomic phase in [0, 2π)
    - params (ModelParams): Truncation settings (default: ModelParams())

    Return:
    - profile (DressednessProfile): The distribution, its bound and the offset e^{-|α|²} sin²γ
    """
    check_zz_angles(gamma, xi)
    if params is None:
        params = ModelParams()
    n = np.arange(poisson_truncation(abs(alpha)**2, params) + 1, dtype=float)
    _, _, d1, d2 = zz_quadratures(alpha, gamma, xi, n)
    return DressednessProfile(np.hypot(d1, d2), None, math.exp(-abs(alpha)**2) * math.sin(gamma)**2)
# End of zz_profile()


def entropy_floor(m: float) -> float:
    """The smallest reduced atomic entropy compatible with the bound M when the atomic coherence vanishes:

        S_min = -½(1-M) ln(½(1-M)) - ½(1+M) ln(½(1+M))

    Params:
    - m (float): The trapping bound, in [0, 1]

    Return:
    - s_min (float): The entropy floor, in nats

    Raises:
    - DomainError: if m lies outside [0, 1]
    """
    if not -constants.BOUND_SLACK <= m <= 1.0 + constants.BOUND_SLACK:
        raise DomainError("The trapping bound must lie in [0, 1], got {}".format(m))
    m = min(max(m, 0.0), 1.0)
    return float(special.entr(0.5 * (1.0 - m)) + special.entr(0.5 * (1.0 + m)))
# End of entropy_floor()


#########################################
# Serialization
#########################################
def coords_to_dict(coords: DressedCoordinates) -> dict:
    """Converts the coordinates into a JSON-ready dictionary.
    """
    return {
        'n_max': coords.n_max,
        'w_minus1': coords.w_minus1,
        'b0_phase': coords.b0_phase,
        'w': coords.w.tolist(),
        'theta': coords.theta.tolist(),
        'chi': coords.chi.tolist(),
        'phi': coords.phi.tolist(),
    }
# End of coords_to_dict()


def profile_to_dict(profile: DressednessProfile) -> dict:
    """Converts the profile into a JSON-ready dictionary.
    """
    return {'m': profile.m, 'w_minus1_sq': profile.w_minus1_sq, 'D': profile.D.tolist()}
# End of profile_to_dict()


def profile_rows(profile: DressednessProfile) -> np.ndarray:
    """Return:
    - rows (np.ndarray): Two columns, n and D_n, ready for an "n,D" CSV
    """
    return np.column_stack((np.arange(profile.D.size), profile.D))
# End of profile_rows()
