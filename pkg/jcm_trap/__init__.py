"""Dressed-state analysis of population trapping in the resonant Jaynes-Cummings model: initial states, the
dressed-state transform and trapping bound, exact dynamics, and the stationary-phase description of revivals.

@since 0.1.0
"""

__version__ = '0.1.0'
