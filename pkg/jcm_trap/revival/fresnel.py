"""Fresnel integrals in the normalization C(x) = √(2/π)∫₀ˣ cos(y²)dy, S(x) = √(2/π)∫₀ˣ sin(y²)dy, and their
first-order asymptotic forms.

@since 0.1.0
"""

import math
from typing import Any

import numpy as np
from scipy import special

from ..errors import DomainError

SCALE = math.sqrt(2.0 / math.pi)
TAIL = 1.0 / math.sqrt(2.0 * math.pi)


def _as_output(values: np.ndarray, like: Any) -> Any:
    return float(values) if np.ndim(like) == 0 else values
# End of _as_output()


def fresnel(x: Any) -> tuple:
    """Evaluates both Fresnel integrals. Both are odd in x.

    The cephes integrals in scipy use the kernel cos(πt²/2); substituting y = t√(π/2) turns them into this
    normalization at the argument x√(2/π).

    Params:
    - x (float or np.ndarray): The upper limit(s)

    Return:
    - C, S (float or np.ndarray): The cosine and sine integrals
    """
    sine, cosine = special.fresnel(SCALE * np.asarray(x, dtype=float))
    return _as_output(cosine, x), _as_output(sine, x)
# End of fresnel()


def fresnel_asymptotic(x: Any) -> tuple:
    """First-order large-x forms C ≈ ½ + sin(x²)/(√(2π)x) and S ≈ ½ - cos(x²)/(√(2π)x). The neglected terms are
    O(x⁻³).

    Params:
    - x (float or np.ndarray): The upper limit(s), > 0

    Return:
    - C, S (float or np.ndarray): The asymptotic values

    Raises:
    - DomainError: for x <= 0
    """
    values = np.asarray(x, dtype=float)
    if np.any(values <= 0):
        raise DomainError("The asymptotic Fresnel forms need x > 0")
    square = values**2
    cosine = 0.5 + TAIL * np.sin(square) / values
    sine = 0.5 - TAIL * np.cos(square) / values
    return _as_output(cosine, x), _as_output(sine, x)
# End of fresnel_asymptotic()
