"""Contains constants for use within the project.

@since 0.1.0
"""

import math

#########################################
# MATH
#########################################
TWO_PI = 2.0 * math.pi
SQRT_TWO = math.sqrt(2.0)

#########################################
# TRUNCATION
#########################################
TAIL_TOLERANCE = 1e-12
MAX_TAIL_TOLERANCE = 1e-6
HARD_CAP = 4096
MIN_N_MAX = 1
DEGENERACY_THRESHOLD = 1e-15

#########################################
# NUMERIC TOLERANCES
#########################################
NORM_TOLERANCE = 1e-10
ATOM_NORM_TOLERANCE = 1e-12
POSITIVITY_TOLERANCE = 1e-12
BOUND_SLACK = 1e-12

#########################################
# REVIVALS
#########################################
K_MAX = 6
SUPPORT_SIGMAS = 12.0
QUAD_ABS_TOLERANCE = 1e-9
QUAD_LIMIT = 1000
QUAD_FAIL_TOLERANCE = 1e-6
PHASE_JUMP_LIMIT = math.pi / 2.0
SIGNIFICANT_WEIGHT = 1e-12
INTERPOLATION_TOLERANCE = 1e-9
DOMINANT_MASS = 0.99

#########################################
# OUTPUT FORMAT
#########################################
FLOAT_FORMAT = '%.17g'
NEWLINE = '\n'
META_SUFFIX = '.meta.json'
INVERSION_HEADER = 'tau,sigma_z'
APPROXIMATION_HEADER = 'tau,sigma_z_exact,sigma_z_approx,k_window'
PROFILE_HEADER = 'n,D'

#########################################
# SERIES LABELS
#########################################
EXACT_DRESSED = 'exact-dressed'
EXACT_BARE = 'exact-bare'
APPROX = 'approx'
SERIES_LABELS = [EXACT_DRESSED, EXACT_BARE, APPROX]

#########################################
# LOGGING LEVELS
#########################################
ERROR = 'Error'
INFO = 'Info'
DEBUG = 'Debug'
TRACE = 'Trace'
LOGGER_PREFIX = 'jcm_trap.'

#########################################
# EXIT CODES
#########################################
EXIT_OK = 0
EXIT_INVALID_ARGUMENTS = 2
EXIT_TRUNCATION = 3
EXIT_QUADRATURE = 4

#########################################
# ARG CHOICES
#########################################
COMMAND_CHOICES = ['state', 'dressed', 'bound', 'evolve', 'revival', 'reproduce']
FAMILY_CHOICES = ['zz', 'eo', 'trapping', 'cat']
PARITY_CHOICES = ['even', 'odd']
MODE_CHOICES = ['exact', 'approx', 'both']
FORMAT_CHOICES = ['csv', 'json']
INTERPOLATION_CHOICES = ['loggamma', 'gaussian', 'sampled']
FIGURE_CHOICES = ['2a', '2b', '2c', '3a', '3b', '4a', '4b', '4c', '5']

#########################################
# ARG DEFAULTS
#########################################
# MODEL
COUPLING = 1.0
N_MAX = 1
# LOGGING
LOG_DIR = 'logs/'
# GRID
TAU_MAX = 100.0
SAMPLES = 4000
WORKERS = 1
# REVIVAL
INTERPOLATION = INTERPOLATION_CHOICES[0]
# RUN
FAMILY = FAMILY_CHOICES[0]
BOUND_FAMILY = FAMILY_CHOICES[1]
PARITY = PARITY_CHOICES[0]
MODE = MODE_CHOICES[0]
FORMAT = FORMAT_CHOICES[0]
ALPHA_RE = 7.0
ALPHA_IM = 0.0
GAMMA = math.pi / 4.0
XI = 0.0
Z_RE = 0.5
Z_IM = 0.0
CONFIG_FILE = None
