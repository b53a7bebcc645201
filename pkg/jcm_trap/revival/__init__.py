"""Stationary-phase description of collapses and revivals.

@since 0.1.0
"""

from .envelope import EnvelopeFn, even_envelope, interp_envelope
from .fresnel import fresnel, fresnel_asymptotic
from .stationary import (approx_inversion, approx_series, collapse_term, fleischhauer_schleich, k_window,
                         revival_center, revival_envelope, revival_sum, revival_term, revival_term_eo,
                         stationary_point)
from .validity import ValidityReport, validity, validity_to_dict

__all__ = [
    'EnvelopeFn', 'even_envelope', 'interp_envelope', 'fresnel', 'fresnel_asymptotic', 'approx_inversion',
    'approx_series', 'collapse_term', 'fleischhauer_schleich', 'k_window', 'revival_center', 'revival_envelope',
    'revival_sum', 'revival_term', 'revival_term_eo', 'stationary_point', 'ValidityReport', 'validity',
    'validity_to_dict',
]
