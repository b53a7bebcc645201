"""Continuous envelopes D(x) e^{iφ(x)} through the integer samples of a weighted dressedness profile, as needed by
the Poisson summation of the inversion.

@since 0.1.0
"""

import math
from typing import Any, Callable

import numpy as np
from scipy import interpolate

from .. import constants
from ..dressed import DressednessProfile, ZZParams, zz_quadratures
from ..errors import DomainError, UnwrapError
from ..logger import debug
from ..states import cat_weight, log_poisson
from ..utils import wrap_angle


class EnvelopeFn(object):
    """A complex envelope D(x) e^{iφ(x)} of a continuous shell variable x, with n = stride·x.

    Instance Variables:
    - weight (callable): x -> complex array D(x) e^{iφ(x)}
    - support (tuple): (x_lo, x_hi), the range outside which the envelope is treated as zero
    - stride (int): 1 for standard shells, 2 for even shells renumbered by m = n/2
    - w_minus1_sq (float): The steady offset w_{-1}² of the underlying state
    - mode (str): The interpolation mode that built the envelope
    """

    def __init__(self, weight: Callable, support: tuple, stride: int = 1, w_minus1_sq: float = 0.0,
                 mode: str = 'sampled'):
        if stride not in (1, 2):
            raise DomainError("The shell stride must be 1 or 2, got {}".format(stride))
        lo, hi = support
        if lo < 0 or hi < lo:
            raise DomainError("Invalid envelope support [{}, {}]".format(lo, hi))
        self.weight = weight
        self.support = (float(lo), float(hi))
        self.stride = stride
        self.w_minus1_sq = float(w_minus1_sq)
        self.mode = mode
    # End of __init__()

    def complex(self, x: Any) -> np.ndarray:
        """Return:
        - values (np.ndarray): D(x) e^{iφ(x)}, zero outside the support
        """
        x = np.asarray(x, dtype=float)
        inside = (x >= self.support[0]) & (x <= self.support[1])
        values = np.zeros(x.shape, dtype=complex)
        if np.any(inside):
            values[inside] = self.weight(x[inside])
        return values
    # End of complex()

    def D(self, x: Any) -> np.ndarray:
        return np.abs(self.complex(x))
    # End of D()

    def phi0(self, x: Any) -> np.ndarray:
        return wrap_angle(np.angle(self.complex(x)))
    # End of phi0()

    def d1(self, x: Any) -> np.ndarray:
        return self.complex(x).real
    # End of d1()

    def d2(self, x: Any) -> np.ndarray:
        return self.complex(x).imag
    # End of d2()
# End of EnvelopeFn()


def _support(profile: DressednessProfile) -> tuple:
    """The window peak ± SUPPORT_SIGMAS·σ of the profile, clipped to its index range.
    """
    if profile.m <= 0.0:
        return 0.0, 0.0
    peak = float(np.argmax(profile.D))
    spread = constants.SUPPORT_SIGMAS * max(profile.sigma(), 1.0)
    return max(0.0, peak - spread), min(float(profile.D.size - 1), peak + spread)
# End of _support()


def _gaussian_weights(mean: float, n: np.ndarray) -> np.ndarray:
    """Gaussian stand-in exp(-(n-μ)²/2μ)/√(2πμ) for the Poisson weights of mean μ.
    """
    return np.exp(-(n - mean)**2 / (2.0 * mean)) / math.sqrt(constants.TWO_PI * mean)
# End of _gaussian_weights()


def _closed_form(zz: ZZParams, mode: str, even_odd: bool) -> Callable:
    """Builds x -> D1(n) + i D2(n) for the ZZ family (n = x) or the entangled even-odd family (n = 2x).

    The even-odd shells carry the cat weights 4N_±² on Q1 and Q2, and their phase factor is e^{-i(ν_α + ξ)}.
    """
    mean = abs(zz.alpha)**2
    cos_sq, sin_sq = math.cos(zz.gamma)**2, math.sin(zz.gamma)**2
    if even_odd:
        excited_scale = cat_weight(zz.alpha, 'even')
        ground_scale = cat_weight(zz.alpha, 'odd') if sin_sq > 0.0 else 0.0
        delta = np.angle(zz.alpha) + zz.xi
    else:
        excited_scale = ground_scale = 1.0
        delta = np.angle(zz.alpha) - zz.xi
    if mode == 'gaussian' and mean <= 0.0:
        raise DomainError("The gaussian envelope needs |alpha| > 0")

    def weight(x: np.ndarray) -> np.ndarray:
        n = 2.0 * x if even_odd else x
        if mode == 'gaussian':
            q1 = excited_scale * cos_sq * _gaussian_weights(mean, n)
            q2 = ground_scale * sin_sq * _gaussian_weights(mean, n + 1.0)
        elif even_odd:
            q1 = excited_scale * cos_sq * np.exp(log_poisson(n, mean))
            q2 = ground_scale * sin_sq * np.exp(log_poisson(n + 1.0, mean))
        else:
            q1, q2, _, _ = zz_quadratures(zz.alpha, zz.gamma, zz.xi, n)
        return (q1 - q2) + 2.0j * np.sqrt(q1 * q2) * math.sin(delta)
    # End of weight()

    return weight
# End of _closed_form()


def _check_constraint(envelope: EnvelopeFn, samples: np.ndarray):
    """Raises DomainError unless the envelope passes through the integer samples.
    """
    x = np.arange(samples.size, dtype=float)
    lo, hi = envelope.support
    inside = (x >= lo) & (x <= hi)
    mismatch = np.abs(envelope.D(x[inside]) - samples[inside])
    if mismatch.size and np.max(mismatch) > constants.INTERPOLATION_TOLERANCE:
        raise DomainError("The closed-form envelope misses the profile by {:.3g}; check the state parameters".format(
            float(np.max(mismatch))))
# End of _check_constraint()


def _sampled(samples: np.ndarray, phases: np.ndarray) -> Callable:
    """PCHIP through D_n and through the unwrapped φ_n of the significant shells.

    Raises:
    - UnwrapError: if the significant shells are not contiguous, or adjacent phases still jump by more than
      PHASE_JUMP_LIMIT after unwrapping
    """
    if samples.size < 2 or np.max(samples) <= 0.0:
        return lambda x: np.zeros(np.shape(x), dtype=complex)
    significant = np.flatnonzero(samples >= constants.SIGNIFICANT_WEIGHT * np.max(samples))
    if np.any(np.diff(significant) > 1):
        if samples.size > 2 and np.all(samples[1::2] < constants.SIGNIFICANT_WEIGHT * np.max(samples)):
            raise UnwrapError("D_n vanishes on every odd shell; build the envelope from the even shells")
        raise UnwrapError("The significant shells of D_n are not contiguous")
    unwrapped = np.unwrap(np.asarray(phases, dtype=float)[significant])
    jumps = np.abs(np.diff(unwrapped))
    if jumps.size and np.max(jumps) > constants.PHASE_JUMP_LIMIT:
        raise UnwrapError("phi_n jumps by {:.3g} between adjacent shells".format(float(np.max(jumps))))
    amplitude = interpolate.PchipInterpolator(np.arange(samples.size, dtype=float), samples, extrapolate=False)
    first, last = float(significant[0]), float(significant[-1])
    phase = None
    if significant.size > 1:
        phase = interpolate.PchipInterpolator(significant.astype(float), unwrapped)

    def weight(x: np.ndarray) -> np.ndarray:
        values = np.maximum(np.nan_to_num(amplitude(x)), 0.0)
        angles = phase(np.clip(x, first, last)) if phase is not None else unwrapped[0]
        return values * np.exp(1j * angles)
    # End of weight()

    return weight
# End of _sampled()


@debug()
def interp_envelope(profile: DressednessProfile, phi0: Any, mode: str = constants.INTERPOLATION, zz: ZZParams = None,
                    stride: int = 1) -> EnvelopeFn:
    """Builds a continuous envelope through the profile.

    Modes:
    - loggamma: ZZ closed form with the factorials continued through the Gamma function (needs zz)
    - gaussian: ZZ closed form with the Poisson weights replaced by Gaussians (needs zz)
    - sampled: PCHIP through D_n and the unwrapped φ_n; phi0 is only read in this mode

    Params:
    - profile (DressednessProfile): The integer samples, indexed by x
    - phi0 (array-like): φ_n(0) on the same indices
    - mode (str): One of constants.INTERPOLATION_CHOICES
    - zz (ZZParams): The ZZ parameters, for the closed-form modes
    - stride (int): 1, or 2 when the profile holds even shells renumbered by m

    Return:
    - envelope (EnvelopeFn): The envelope

    Raises:
    - DomainError: for an unknown mode, a closed-form mode without zz, or a closed form that misses the samples
    - UnwrapError: when the sampled phases cannot be made continuous
    """
    if mode not in constants.INTERPOLATION_CHOICES:
        raise DomainError("Interpolation mode must be one of {}, got {}".format(constants.INTERPOLATION_CHOICES, mode))
    support = _support(profile)
    if mode == 'sampled':
        phi0 = np.asarray(phi0, dtype=float)
        if phi0.shape != profile.D.shape:
            raise DomainError("phi0 must hold one phase per profile entry")
        return EnvelopeFn(_sampled(profile.D, phi0), support, stride, profile.w_minus1_sq, mode)
    if zz is None:
        raise DomainError("The {} mode needs the ZZ parameters".format(mode))
    envelope = EnvelopeFn(_closed_form(zz, mode, stride == 2), support, stride, profile.w_minus1_sq, mode)
    if mode == 'loggamma':
        _check_constraint(envelope, profile.D)
    return envelope
# End of interp_envelope()


def even_envelope(profile: DressednessProfile, phi0: Any, mode: str = 'sampled', zz: ZZParams = None) -> EnvelopeFn:
    """Envelope over the even shells renumbered by m = n/2, for profiles that vanish on every odd shell.
    In the closed-form modes zz describes the entangled even-odd state cos γ|e>|even> + sin γ e^{iξ}|g>|odd>.

    Params:
    - profile (DressednessProfile): The full profile over n
    - phi0 (array-like): φ_n(0) over n
    - mode (str): One of constants.INTERPOLATION_CHOICES
    - zz (ZZParams): The even-odd parameters, for the closed-form modes

    Return:
    - envelope (EnvelopeFn): A stride-2 envelope
    """
    even = DressednessProfile(profile.D[0::2], None, profile.w_minus1_sq)
    return interp_envelope(even, np.asarray(phi0, dtype=float)[0::2], mode, zz, stride=2)
# End of even_envelope()
