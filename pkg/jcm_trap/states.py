"""Truncated pure atom-field states in the bare basis {|e,n>, |g,n>}: the model parameters, the atom, field and joint
state values, and constructors for every initial-state family in use (coherent, phase-coherent, cat, product and
even-odd entangled states).

@since 0.1.0
"""

import math
from collections import namedtuple
from typing import Any

import numpy as np
from scipy import special

from . import constants
from .errors import DomainError, TruncationError
from .logger import debug, trace
from .utils import compensated_sum


def _frozen(values: Any, dtype: type = complex) -> np.ndarray:
    """Copies the values into a read-only numpy array.
    """
    array = np.array(values, dtype=dtype)
    array.flags.writeable = False
    return array
# End of _frozen()


class ModelParams(namedtuple('ModelParams', ['coupling', 'n_max', 'tail_tolerance', 'hard_cap'])):
    """Parameters shared by every state constructor. Time is always scaled, tau = coupling * t, so the coupling is
    only carried for labelling outputs.

    Instance Variables:
    - coupling (float): The atom-field coupling constant λ (> 0)
    - n_max (int): The smallest truncation a constructor may use (>= 1). Constructors grow it to meet the tolerance
    - tail_tolerance (float): The probability weight allowed beyond the truncation, in (0, 1e-6]
    - hard_cap (int): The largest truncation a constructor may grow to
    """
    __slots__ = ()

    def __new__(cls, coupling: float = constants.COUPLING, n_max: int = constants.N_MAX,
                tail_tolerance: float = constants.TAIL_TOLERANCE, hard_cap: int = constants.HARD_CAP):
        if not (math.isfinite(coupling) and coupling > 0):
            raise DomainError("The coupling must be a positive finite number, got {}".format(coupling))
        if int(n_max) != n_max or n_max < constants.MIN_N_MAX:
            raise DomainError("The truncation n_max must be an integer >= 1, got {}".format(n_max))
        if not 0 < tail_tolerance <= constants.MAX_TAIL_TOLERANCE:
            raise DomainError("The tail tolerance must lie in (0, 1e-6], got {}".format(tail_tolerance))
        if int(hard_cap) != hard_cap or hard_cap < n_max:
            raise DomainError("The hard cap must be an integer >= n_max, got {}".format(hard_cap))
        return super().__new__(cls, float(coupling), int(n_max), float(tail_tolerance), int(hard_cap))
    # End of __new__()
# End of ModelParams()


class AtomState(namedtuple('AtomState', ['p', 'q'])):
    """A normalized two-level atom, p|e> + q|g>.
    """
    __slots__ = ()

    def __new__(cls, p: complex, q: complex):
        p, q = complex(p), complex(q)
        if abs(abs(p)**2 + abs(q)**2 - 1.0) > constants.ATOM_NORM_TOLERANCE:
            raise DomainError("Atom amplitudes must satisfy |p|^2 + |q|^2 = 1, got {}".format(
                abs(p)**2 + abs(q)**2))
        return super().__new__(cls, p, q)
    # End of __new__()
# End of AtomState()


class FieldState(namedtuple('FieldState', ['c'])):
    """A normalized single-mode field truncated to the Fock states 0..n_max.

    Instance Variables:
    - c (np.ndarray): The read-only complex Fock amplitudes c_n, n = 0..n_max
    """
    __slots__ = ()

    def __new__(cls, c: Any):
        c = _frozen(c)
        if c.ndim != 1 or c.size < 2:
            raise DomainError("Field amplitudes must be a 1D array of at least 2 entries")
        norm = compensated_sum(np.abs(c)**2)
        if abs(norm - 1.0) > constants.NORM_TOLERANCE:
            raise DomainError("Field state is not normalized: norm = {}".format(norm))
        return super().__new__(cls, c)
    # End of __new__()

    @property
    def n_max(self) -> int:
        return self.c.size - 1
    # End of n_max()

    def photon_distribution(self) -> np.ndarray:
        """Return:
        - P (np.ndarray): |c_n|^2
        """
        return np.abs(self.c)**2
    # End of photon_distribution()
# End of FieldState()


class JointState(namedtuple('JointState', ['a', 'b'])):
    """A normalized pure atom-field state truncated to photon numbers 0..n_max.

    Instance Variables:
    - a (np.ndarray): Read-only amplitudes a_n = <e,n|Ψ>
    - b (np.ndarray): Read-only amplitudes b_n = <g,n|Ψ>
    """
    __slots__ = ()

    def __new__(cls, a: Any, b: Any):
        a, b = _frozen(a), _frozen(b)
        if a.ndim != 1 or a.shape != b.shape or a.size < 2:
            raise DomainError("Joint amplitudes must be two 1D arrays of the same length (>= 2)")
        state = super().__new__(cls, a, b)
        norm = state.norm()
        if abs(norm - 1.0) > constants.NORM_TOLERANCE:
            raise DomainError("Joint state is not normalized: norm = {}".format(norm))
        return state
    # End of __new__()

    @property
    def n_max(self) -> int:
        return self.a.size - 1
    # End of n_max()

    def norm(self) -> float:
        """Return:
        - norm (float): Σ |a_n|^2 + |b_n|^2
        """
        return compensated_sum(np.concatenate((np.abs(self.a)**2, np.abs(self.b)**2)))
    # End of norm()

    def tail_weight(self) -> float:
        """Return:
        - weight (float): |a_{n_max}|^2 + |b_{n_max}|^2, the weight sitting on the truncation edge
        """
        return float(abs(self.a[-1])**2 + abs(self.b[-1])**2)
    # End of tail_weight()
# End of JointState()


#########################################
# Truncation helpers
#########################################
def log_poisson(n: np.ndarray, mean: float) -> np.ndarray:
    """ln(e^{-mean} mean^n / n!), valid for non-integer n through the Gamma function.
    """
    return -mean + special.xlogy(n, mean) - special.gammaln(np.asarray(n, dtype=float) + 1.0)
# End of log_poisson()


def poisson_truncation(mean: float, params: ModelParams, weight: float = 1.0) -> int:
    """Finds the smallest N >= params.n_max for which weight * P(X >= N) < tail_tolerance, X ~ Poisson(mean).
    Covering P(X >= N) also bounds the weight on the edge state N itself.

    Raises:
    - TruncationError: if no N up to the hard cap meets the tolerance
    """
    candidates = np.arange(params.n_max, params.hard_cap + 1)
    if mean == 0.0:
        return params.n_max
    tails = weight * special.gammainc(candidates, mean)
    passing = np.flatnonzero(tails < params.tail_tolerance)
    if passing.size == 0:
        raise TruncationError(
            "Poisson mean {:.6g} needs a truncation beyond the hard cap {}".format(mean, params.hard_cap),
            params.hard_cap, params.hard_cap)
    return int(candidates[passing[0]])
# End of poisson_truncation()


def _coherent_amplitudes(alpha: complex, n_max: int) -> np.ndarray:
    """Exact coherent-state amplitudes e^{-|α|²/2} αⁿ/√(n!) for n = 0..n_max, built in log space.
    """
    n = np.arange(n_max + 1)
    magnitude = np.exp(0.5 * log_poisson(n, abs(alpha)**2))
    return magnitude * np.exp(1j * n * np.angle(alpha))
# End of _coherent_amplitudes()


def _renormalized(amplitudes: np.ndarray) -> np.ndarray:
    """Divides by the norm over the truncated range.
    """
    return amplitudes / math.sqrt(compensated_sum(np.abs(amplitudes)**2))
# End of _renormalized()


def cat_weight(alpha: complex, parity: str) -> float:
    """Squared amplitude factor 4N² = 2/(1 ± e^{-2|α|²}) multiplying the Poisson weights of a cat state.

    Raises:
    - DomainError: for an unknown parity, or for the odd cat at α = 0, which does not exist
    """
    mean = abs(alpha)**2
    if parity == 'even':
        return 2.0 / (1.0 + math.exp(-2.0 * mean))
    if parity == 'odd':
        if mean == 0.0:
            raise DomainError("The odd cat state is undefined for alpha = 0")
        return 2.0 / -math.expm1(-2.0 * mean)
    raise DomainError("Parity must be one of {}, got {}".format(constants.PARITY_CHOICES, parity))
# End of cat_weight()


def _cat_amplitudes(alpha: complex, parity: str, n_max: int) -> np.ndarray:
    """Unrenormalized cat amplitudes on 0..n_max, exactly zero at the forbidden parity.
    """
    weight = cat_weight(alpha, parity)
    amplitudes = np.zeros(n_max + 1, dtype=complex)
    start = 0 if parity == 'even' else 1
    amplitudes[start::2] = math.sqrt(weight) * _coherent_amplitudes(alpha, n_max)[start::2]
    return amplitudes
# End of _cat_amplitudes()


def check_zz_angles(gamma: float, xi: float):
    """Raises DomainError unless γ ∈ [0, π/2] and ξ ∈ [0, 2π).
    """
    if not 0.0 <= gamma <= math.pi / 2.0:
        raise DomainError("gamma must lie in [0, pi/2], got {}".format(gamma))
    if not 0.0 <= xi < constants.TWO_PI:
        raise DomainError("xi must lie in [0, 2pi), got {}".format(xi))
# End of check_zz_angles()


#########################################
# Field constructors
#########################################
@debug()
def coherent_field(alpha: complex, params: ModelParams) -> FieldState:
    """Creates the coherent field |α>, truncated where the Poisson tail drops below the tail tolerance.

    Params:
    - alpha (complex): The coherent amplitude
    - params (ModelParams): Truncation settings

    Return:
    - field (FieldState): The normalized coherent field

    Raises:
    - TruncationError: if the truncation would exceed the hard cap
    """
    n_max = poisson_truncation(abs(alpha)**2, params)
    return FieldState(_renormalized(_coherent_amplitudes(alpha, n_max)))
# End of coherent_field()


@debug()
def phase_field(z: complex, signs: Any, params: ModelParams) -> FieldState:
    """Creates the field with amplitudes c_n ∝ j(n) zⁿ. With every j(n) = +1 this is the phase-coherent
    (Susskind-Glogower eigenstate) field.

    Params:
    - z (complex): The geometric ratio, |z| < 1
    - signs (array of int): j(n) ∈ {+1, -1}; positions past the end of the array default to +1
    - params (ModelParams): Truncation settings

    Return:
    - field (FieldState): The normalized field

    Raises:
    - DomainError: if |z| >= 1 or a sign is not ±1
    - TruncationError: if the truncation would exceed the hard cap
    """
    z = complex(z)
    radius = abs(z)
    if radius >= 1.0:
        raise DomainError("|z| must be less than 1 for the state to be normalisable, got |z| = {}".format(radius))
    signs = np.asarray(signs if signs is not None else [], dtype=int).ravel()
    if np.any(np.abs(signs) != 1):
        raise DomainError("Every sign j(n) must be +1 or -1")
    n_max = params.n_max
    if radius > 0.0:
        # The weight at and beyond N is |z|^(2N)
        n_max = max(n_max, int(math.floor(math.log(params.tail_tolerance) / (2.0 * math.log(radius)))) + 1)
    if n_max > params.hard_cap:
        raise TruncationError("|z| = {} needs truncation {} beyond the hard cap {}".format(
            radius, n_max, params.hard_cap), n_max, params.hard_cap)
    full_signs = np.ones(n_max + 1, dtype=int)
    used = min(signs.size, n_max + 1)
    full_signs[:used] = signs[:used]
    powers = np.cumprod(np.concatenate(([1.0 + 0.0j], np.full(n_max, z))))
    amplitudes = full_signs * powers * math.sqrt(1.0 - radius**2)
    return FieldState(_renormalized(amplitudes))
# End of phase_field()


@debug()
def cat_field(alpha: complex, parity: str, params: ModelParams) -> FieldState:
    """Creates the even or odd cat field (|α> ± |-α>), using the exact normalization 1/√(2(1 ± e^{-2|α|²})).

    Params:
    - alpha (complex): The coherent amplitude
    - parity (str): 'even' or 'odd'
    - params (ModelParams): Truncation settings

    Return:
    - field (FieldState): The normalized cat field, exactly zero at the other parity

    Raises:
    - DomainError: for an unknown parity or the odd cat at α = 0
    - TruncationError: if the truncation would exceed the hard cap
    """
    n_max = poisson_truncation(abs(alpha)**2, params, cat_weight(alpha, parity))
    return FieldState(_renormalized(_cat_amplitudes(alpha, parity, n_max)))
# End of cat_field()


#########################################
# Atom constructors
#########################################
def zz_atom(gamma: float, xi: float) -> AtomState:
    """The atomic superposition cos γ|e> + e^{-iξ} sin γ|g>.
    """
    check_zz_angles(gamma, xi)
    return AtomState(math.cos(gamma), np.exp(-1j * xi) * math.sin(gamma))
# End of zz_atom()


def trapping_atom(z: complex) -> AtomState:
    """The atom (z|e> + |g>)/√(1+|z|²) that pairs with a phase-coherent field into a perfect-trapping state.
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError("|z| must be less than 1, got |z| = {}".format(abs(z)))
    scale = 1.0 / math.sqrt(1.0 + abs(z)**2)
    return AtomState(z * scale, scale)
# End of trapping_atom()


#########################################
# Joint constructors
#########################################
@trace()
def product_state(atom: AtomState, field: FieldState) -> JointState:
    """Creates the unentangled state (p|e> + q|g>) ⊗ Σ c_n|n>.

    Params:
    - atom (AtomState): The atom
    - field (FieldState): The field

    Return:
    - state (JointState): a_n = p c_n, b_n = q c_n
    """
    return JointState(atom.p * field.c, atom.q * field.c)
# End of product_state()


def zz_state(alpha: complex, gamma: float, xi: float, params: ModelParams) -> JointState:
    """The atomic superposition of zz_atom times the coherent field |α>.
    """
    return product_state(zz_atom(gamma, xi), coherent_field(alpha, params))
# End of zz_state()


def perfect_trapping_state(z: complex, signs: Any, params: ModelParams) -> JointState:
    """trapping_atom(z) times phase_field(z, signs). Every shell is a single dressed state, so the inversion is
    frozen at -(1-|z|²)/(1+|z|²).
    """
    return product_state(trapping_atom(z), phase_field(z, signs, params))
# End of perfect_trapping_state()


@debug()
def eo_state(alpha: complex, gamma: float, xi: float, params: ModelParams) -> JointState:
    """Creates the entangled even-odd state cos γ|e>|even> + sin γ e^{iξ}|g>|odd>, assembled directly in the bare
    basis with the exact cat normalizations.

    Params:
    - alpha (complex): The coherent amplitude of both cat components
    - gamma (float): Mixing angle in [0, π/2]
    - xi (float): Relative phase in [0, 2π)
    - params (ModelParams): Truncation settings

    Return:
    - state (JointState): a_n is nonzero only for even n, b_n only for odd n

    Raises:
    - DomainError: on out-of-range angles, or γ > 0 with α = 0 (no odd cat)
    - TruncationError: if the truncation would exceed the hard cap
    """
    check_zz_angles(gamma, xi)
    mean = abs(alpha)**2
    cos_gamma, sin_gamma = math.cos(gamma), math.sin(gamma)
    use_odd = sin_gamma != 0.0
    n_max = poisson_truncation(mean, params, cat_weight(alpha, 'even'))
    if use_odd:
        n_max = max(n_max, poisson_truncation(mean, params, cat_weight(alpha, 'odd')))
    a = cos_gamma * _renormalized(_cat_amplitudes(alpha, 'even', n_max))
    b = np.zeros(n_max + 1, dtype=complex)
    if use_odd:
        b = sin_gamma * np.exp(1j * xi) * _renormalized(_cat_amplitudes(alpha, 'odd', n_max))
    scale = math.sqrt(compensated_sum(np.concatenate((np.abs(a)**2, np.abs(b)**2))))
    return JointState(a / scale, b / scale)
# End of eo_state()


#########################################
# Serialization
#########################################
def state_to_dict(state: JointState) -> dict:
    """Converts the state into the JSON-ready layout {"n_max", "a_re", "a_im", "b_re", "b_im"}.
    """
    return {
        'n_max': state.n_max,
        'a_re': state.a.real.tolist(),
        'a_im': state.a.imag.tolist(),
        'b_re': state.b.real.tolist(),
        'b_im': state.b.imag.tolist(),
    }
# End of state_to_dict()


def state_from_dict(data: dict) -> JointState:
    """Inverse of state_to_dict.

    Raises:
    - DomainError: if the arrays do not have n_max + 1 entries
    """
    a = np.asarray(data['a_re'], dtype=float) + 1j * np.asarray(data['a_im'], dtype=float)
    b = np.asarray(data['b_re'], dtype=float) + 1j * np.asarray(data['b_im'], dtype=float)
    if a.size != data['n_max'] + 1 or b.size != data['n_max'] + 1:
        raise DomainError("Amplitude arrays must hold n_max + 1 = {} entries".format(data['n_max'] + 1))
    return JointState(a, b)
# End of state_from_dict()
