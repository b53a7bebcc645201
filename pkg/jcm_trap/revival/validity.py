"""Validity diagnostics for the stationary-phase revivals: the time threshold after which the zeroth-order Fresnel
asymptotics hold, and the photon-number floor the envelope has to clear.

@since 0.1.0
"""

import math
from collections import namedtuple

import numpy as np

from .. import constants
from ..dressed import DressednessProfile
from .stationary import check_poisson_index, revival_center

ValidityReport = namedtuple('ValidityReport', ['k', 'tau_min', 'n_bound', 'dominant_n', 'condition_b_ok', 'mean_n',
                                               'tau_center', 'time_condition_ok'])


def time_threshold(k: int) -> float:
    """τ_min(k) = 2(√(π|k|) + √(2π|k| + 4π²k²)); about 17 for k = 1.
    """
    check_poisson_index(k)
    k = abs(k)
    return 2.0 * (math.sqrt(math.pi * k) + math.sqrt(constants.TWO_PI * k + 4.0 * math.pi**2 * k**2))
# End of time_threshold()


def photon_bound(k: int) -> float:
    """The floor n + 1 > 4 + (3/2 + √(2 + 4π|k|))/(2π|k|) on the shells carrying the envelope.
    """
    check_poisson_index(k)
    k = abs(k)
    return 4.0 + (1.5 + math.sqrt(2.0 + 4.0 * math.pi * k)) / (constants.TWO_PI * k)
# End of photon_bound()


def dominant_shell(profile: DressednessProfile, stride: int = 1) -> int:
    """The largest physical n such that shells n and above hold DOMINANT_MASS of Σ D_n; 0 for an empty profile.
    """
    if profile.m <= 0.0:
        return 0
    tail_mass = np.cumsum(profile.D[::-1])[::-1]
    covering = np.flatnonzero(tail_mass >= constants.DOMINANT_MASS * tail_mass[0])
    return int(stride * covering[-1])
# End of dominant_shell()


def validity(k: int, profile: DressednessProfile, stride: int = 1) -> ValidityReport:
    """Checks both validity conditions of the k-th revival term.

    Params:
    - k (int): The nonzero Poisson index
    - profile (DressednessProfile): The profile, indexed by x with n = stride·x
    - stride (int): 1, or 2 for a profile of even shells

    Return:
    - report (ValidityReport): Thresholds, the dominant shell, the revival center estimate (with the +1) and
      whether each condition holds

    Raises:
    - DomainError: for k = 0
    """
    tau_min = time_threshold(k)
    n_bound = photon_bound(k)
    dominant_n = dominant_shell(profile, stride)
    mean_n = stride * profile.mean()
    tau_center = revival_center(k, mean_n, stride)[1]
    return ValidityReport(int(k), tau_min, n_bound, dominant_n, bool(profile.m > 0.0 and dominant_n + 1 > n_bound),
                          mean_n, tau_center, bool(tau_center > tau_min))
# End of validity()


def validity_to_dict(report: ValidityReport) -> dict:
    """The JSON layout {"k", "tau_min", "condition_b_ok", "dominant_n"}.
    """
    return {
        'k': report.k,
        'tau_min': report.tau_min,
        'condition_b_ok': report.condition_b_ok,
        'dominant_n': report.dominant_n,
    }
# End of validity_to_dict()
