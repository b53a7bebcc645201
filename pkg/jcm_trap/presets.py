"""Parameter presets for the `reproduce` command, one per figure panel.

Every panel uses a coherent amplitude α = 7 (49 photons on average) and an atom mixing angle γ = π/4 unless it
varies γ itself. Phase differences Δ = ν_α - ξ are turned into ξ with ν_α = 0.

@since 0.1.0
"""

import math
from collections import namedtuple

from . import constants
from .utils import wrap_angle

ALPHA = 7.0
HALF_MIX = math.pi / 4.0
FIGURE5_PHASE_DIFF = math.pi / 2.0
FIGURE5_K_MAX = 2

# kind: 'inversion' (exact series), 'profile' (several D_n columns) or 'approximation' (exact vs stationary phase)
FigurePreset = namedtuple('FigurePreset', ['kind', 'family', 'panels', 'header'])


def _panel(gamma: float, phase_diff: float) -> tuple:
    return gamma, float(wrap_angle(-phase_diff))
# End of _panel()


PRESETS = {
    '2a': FigurePreset('inversion', 'zz', [_panel(HALF_MIX, math.pi / 2.0)], constants.INVERSION_HEADER),
    '2b': FigurePreset('inversion', 'zz', [_panel(HALF_MIX, math.pi / 10.0)], constants.INVERSION_HEADER),
    '2c': FigurePreset('inversion', 'zz', [_panel(HALF_MIX, 0.0)], constants.INVERSION_HEADER),
    '3a': FigurePreset('profile', 'zz',
                       [_panel(HALF_MIX, math.pi / 2.0), _panel(HALF_MIX, math.pi / 4.0), _panel(HALF_MIX, 0.0)],
                       'n,D_I,D_II,D_III'),
    '3b': FigurePreset('profile', 'zz',
                       [_panel(math.pi / 2.0, 0.0), _panel(math.pi / 3.0, 0.0), _panel(HALF_MIX, 0.0)],
                       'n,D_1,D_2,D_III'),
    '4a': FigurePreset('inversion', 'eo', [_panel(HALF_MIX, math.pi / 2.0)], constants.INVERSION_HEADER),
    '4b': FigurePreset('inversion', 'eo', [_panel(HALF_MIX, math.pi / 10.0)], constants.INVERSION_HEADER),
    '4c': FigurePreset('inversion', 'eo', [_panel(HALF_MIX, 0.0)], constants.INVERSION_HEADER),
    '5': FigurePreset('approximation', 'zz', None, constants.APPROXIMATION_HEADER),
}


def figure_panels(figure: str, phase_diff: float = None) -> list:
    """Return:
    - panels (list<tuple>): The (gamma, xi) pairs of the figure. Figure 5 takes its phase difference from phase_diff
      (default π/2 for the first panel, 0 selects the second)
    """
    preset = PRESETS[figure]
    if preset.panels is not None:
        return list(preset.panels)
    return [_panel(HALF_MIX, FIGURE5_PHASE_DIFF if phase_diff is None else phase_diff)]
# End of figure_panels()
