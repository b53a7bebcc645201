"""Utility module for parsing command-line arguments.

Settings that a YAML config file may also provide (model, logging, grid and revival) default to None here, so that
only the arguments actually given override the config file.

@since 0.1.0
"""

import argparse

from . import constants

COMMAND_HELP = {
    'state': 'Write the bare amplitudes of an initial state as JSON.',
    'dressed': 'Write the dressed coordinates (JSON) or the weighted dressedness D_n (CSV) of a state.',
    'bound': 'Report the trapping bound M, the offset w_{-1}^2 and the entropy floor as JSON.',
    'evolve': 'Sample the exact and/or approximate inversion on a time grid.',
    'revival': 'Compare exact and stationary-phase inversions (CSV) or report validity thresholds (JSON).',
    'reproduce': 'Write the dataset behind one figure panel, plus a metadata file.',
}


def create_parser() -> argparse.ArgumentParser:
    """Builds the parser, with one sub-command per entry in constants.COMMAND_CHOICES.

    Return:
    - parser (argparse.ArgumentParser): The parser
    """
    arg_parse = argparse.ArgumentParser(prog='jcm-trap',
                                        description='Population trapping in the Jaynes-Cummings model.')
    subparsers = arg_parse.add_subparsers(dest='command', help='Sub-command help.')
    subparsers.required = True
    for command in constants.COMMAND_CHOICES:
        parser = subparsers.add_parser(command, help=COMMAND_HELP[command])
        add_state_arguments(parser)
        add_model_arguments(parser)
        add_log_arguments(parser)
        add_grid_arguments(parser)
        add_revival_arguments(parser)
        add_output_arguments(parser)
        if command == 'bound':
            parser.set_defaults(family=constants.BOUND_FAMILY)
        if command == 'reproduce':
            parser.add_argument('--figure', required=True, choices=constants.FIGURE_CHOICES,
                                help='The figure panel to reproduce.')
    return arg_parse
# End of create_parser()


def parse_arguments(argv: list = None) -> argparse.Namespace:
    """Parses the command line arguments and returns the namespace with those arguments.

    Params:
    - argv (list<str>): The arguments to parse (default: sys.argv[1:])

    Return:
    - args (argparse.Namespace): The Namespace containing the values of all passed-in command-line arguments
    """
    return create_parser().parse_args(argv)
# End of parse_arguments()


def add_state_arguments(parser: argparse.ArgumentParser):
    """Adds the state family and its parameters. Angles are in radians.

    Params:
    - parser (argparse.ArgumentParser): The argument parser to which to add the state arguments
    """
    group = parser.add_argument_group('State Args')
    group.add_argument('--family', default=constants.FAMILY, choices=constants.FAMILY_CHOICES,
                       help='The initial-state family.')
    group.add_argument('--alpha-re', dest='alpha_re', type=float, default=constants.ALPHA_RE,
                       help='Real part of the coherent amplitude alpha.')
    group.add_argument('--alpha-im', dest='alpha_im', type=float, default=constants.ALPHA_IM,
                       help='Imaginary part of the coherent amplitude alpha.')
    group.add_argument('--gamma', type=float, default=constants.GAMMA,
                       help='Atomic mixing angle in [0, pi/2].')
    group.add_argument('--xi', type=float, default=constants.XI,
                       help='Atomic phase in [0, 2pi).')
    group.add_argument('--phase-diff', dest='phase_diff', type=float, default=None,
                       help='Sets xi = (arg(alpha) - phase_diff) mod 2pi, overriding --xi.')
    group.add_argument('--z-re', dest='z_re', type=float, default=constants.Z_RE,
                       help='Real part of the perfect-trapping ratio z, |z| < 1.')
    group.add_argument('--z-im', dest='z_im', type=float, default=constants.Z_IM,
                       help='Imaginary part of the perfect-trapping ratio z.')
    group.add_argument('--signs-file', dest='signs_file', default=None,
                       help='File of +1/-1 tokens, one per line, giving the signs j(n) of the trapping field.')
    group.add_argument('--parity', default=constants.PARITY, choices=constants.PARITY_CHOICES,
                       help='Parity of the cat field.')
# End of add_state_arguments()


def add_model_arguments(parser: argparse.ArgumentParser):
    """Adds the truncation arguments.

    Params:
    - parser (argparse.ArgumentParser): The argument parser to which to add the model arguments
    """
    group = parser.add_argument_group('Model Args')
    group.add_argument('--n-max', dest='n_max', type=int, default=None,
                       help="The smallest Fock truncation. Defaults to %d" % constants.N_MAX)
    group.add_argument('--tail-tolerance', dest='tail_tolerance', type=float, default=None,
                       help="The weight allowed beyond the truncation. Defaults to %g" % constants.TAIL_TOLERANCE)
    group.add_argument('--hard-cap', dest='hard_cap', type=int, default=None,
                       help="The largest truncation allowed. Defaults to %d" % constants.HARD_CAP)
    group.add_argument('--config', dest='config_file', default=constants.CONFIG_FILE,
                       help='A YAML file with model, logging, grid and revival sections.')
# End of add_model_arguments()


def add_log_arguments(parser: argparse.ArgumentParser):
    """Adds arguments for setting up the logger to the given argument parser.

    Params:
    - parser (argparse.ArgumentParser): The argument parser to which to add the logger arguments
    """
    group = parser.add_argument_group('Logging Args')
    group.add_argument('--log-dir', dest='log_dir', default=None,
                       help="The directory where the log files will be stored. Defaults to %s" % constants.LOG_DIR)
# End of add_log_arguments()


def add_grid_arguments(parser: argparse.ArgumentParser):
    """Adds the time-grid arguments.

    Params:
    - parser (argparse.ArgumentParser): The argument parser to which to add the grid arguments
    """
    group = parser.add_argument_group('Grid Args')
    group.add_argument('--tau-max', dest='tau_max', type=float, default=None,
                       help="The last scaled time lambda*t. Defaults to %g" % constants.TAU_MAX)
    group.add_argument('--samples', type=int, default=None,
                       help="The number of grid times. Defaults to %d" % constants.SAMPLES)
    group.add_argument('--workers', type=int, default=None,
                       help="The number of processes sampling the grid. Defaults to %d" % constants.WORKERS)
# End of add_grid_arguments()


def add_revival_arguments(parser: argparse.ArgumentParser):
    """Adds the stationary-phase arguments.

    Params:
    - parser (argparse.ArgumentParser): The argument parser to which to add the revival arguments
    """
    group = parser.add_argument_group('Revival Args')
    group.add_argument('--k-max', dest='k_max', type=int, default=None,
                       help="The number of revivals kept. Defaults to %d" % constants.K_MAX)
    group.add_argument('--interpolation', default=None, choices=constants.INTERPOLATION_CHOICES,
                       help="How D_n is continued between integers. Defaults to %s" % constants.INTERPOLATION)
    group.add_argument('--mode', default=constants.MODE, choices=constants.MODE_CHOICES,
                       help='Which inversion to sample: exact, approx or both.')
# End of add_revival_arguments()


def add_output_arguments(parser: argparse.ArgumentParser):
    """Adds the output arguments.

    Params:
    - parser (argparse.ArgumentParser): The argument parser to which to add the output arguments
    """
    group = parser.add_argument_group('Output Args')
    group.add_argument('--out', default=None,
                       help='The output file. Without it the data is written to stdout and no metadata is kept.')
    group.add_argument('--format', default=constants.FORMAT, choices=constants.FORMAT_CHOICES,
                       help='The output format, where the command supports both.')
# End of add_output_arguments()
