"""Command-line front end. Builds the configured initial state, runs the requested computation and writes
deterministic CSV/JSON data files.

@since 0.1.0
"""

import sys

import numpy as np
import yaml

from . import constants
from . import presets
from .cmd_arg_parser import parse_arguments
from .dressed import DressednessProfile, ZZParams, coords_to_dict, dressedness_minimum, dressedness_profile, \
    entropy_floor, profile_rows, profile_to_dict, to_dressed, zz_profile
from .dynamics import series, uniform_grid
from .errors import DomainError, QuadratureError, SignsFileError, TruncationError, UnwrapError
from .logger import Logger, info
from .revival import approx_series, even_envelope, interp_envelope, k_window, validity, validity_to_dict
from .saver import write_csv, write_json, write_metadata
from .settings import Settings
from .states import cat_field, eo_state, perfect_trapping_state, product_state, state_to_dict, \
    zz_atom, zz_state

SIGN_TOKENS = {'+1': 1, '-1': -1}


def parse_signs_file(path: str) -> np.ndarray:
    """Reads the signs j(n) of a perfect-trapping field, one '+1' or '-1' token per line.

    Params:
    - path (str): The signs file

    Return:
    - signs (np.ndarray): The signs in file order; an empty file gives an empty array

    Raises:
    - SignsFileError: on any other token, with its line number
    """
    with open(path, 'r') as signs_file:
        lines = signs_file.read().splitlines()
    signs = list()
    for line_number, line in enumerate(lines, start=1):
        token = line.strip()
        if token not in SIGN_TOKENS:
            raise SignsFileError("expected '+1' or '-1', got '{}'".format(token), line_number)
        signs.append(SIGN_TOKENS[token])
    return np.array(signs, dtype=int)
# End of parse_signs_file()


def build_state(settings: Settings) -> tuple:
    """Builds the initial state of the configured family.

    Return:
    - state (JointState): The initial state
    - zz (ZZParams or None): The closed-form parameters, for the zz and eo families
    """
    config, params = settings.run, settings.model_params()
    xi = config.atomic_phase()
    if config.family == 'zz':
        return zz_state(config.alpha, config.gamma, xi, params), ZZParams(config.alpha, config.gamma, xi)
    if config.family == 'eo':
        return eo_state(config.alpha, config.gamma, xi, params), ZZParams(config.alpha, config.gamma, xi)
    if config.family == 'trapping':
        signs = parse_signs_file(config.signs_file) if config.signs_file is not None else None
        return perfect_trapping_state(config.z, signs, params), None
    return product_state(zz_atom(config.gamma, xi), cat_field(config.alpha, config.parity, params)), None
# End of build_state()


def build_envelope(settings: Settings, state, zz: ZZParams):
    """The envelope of the state's weighted dressedness. The closed-form modes need ZZ-shaped profiles; every other
    family is interpolated from its samples.
    """
    coords = to_dressed(state)
    profile = dressedness_profile(coords)
    mode = settings.revival.interpolation
    if zz is None:
        mode = 'sampled'
    if settings.run.family == 'eo':
        return even_envelope(profile, coords.phi, mode, zz), profile
    return interp_envelope(profile, coords.phi, mode, zz), profile
# End of build_envelope()


def _params(settings: Settings) -> dict:
    return {
        'run': settings.run.to_dict(),
        'model': settings.model.to_dict(),
        'grid': settings.grid.to_dict(),
        'revival': settings.revival.to_dict(),
    }
# End of _params()


def _inversion_table(settings: Settings, state, zz: ZZParams, mode: str) -> tuple:
    """Samples the inversion for the evolve, revival and reproduce commands.

    Return:
    - header (str): The CSV header
    - rows (np.ndarray): The table
    """
    grid = uniform_grid(settings.grid.tau_max, settings.grid.samples)
    if mode == 'exact':
        exact = series(state, grid, constants.EXACT_DRESSED, settings.grid.workers)
        return constants.INVERSION_HEADER, np.column_stack((grid.tau, exact.sigma_z))
    envelope, _ = build_envelope(settings, state, zz)
    k_max = settings.revival.k_max
    approx = approx_series(grid, envelope, k_max, **settings.revival.quad_options())
    if mode == 'approx':
        return constants.INVERSION_HEADER, np.column_stack((grid.tau, approx.sigma_z))
    exact = series(state, grid, constants.EXACT_DRESSED, settings.grid.workers)
    windows = k_window(grid.tau, envelope, k_max)
    return constants.APPROXIMATION_HEADER, np.column_stack((grid.tau, exact.sigma_z, approx.sigma_z, windows))
# End of _inversion_table()


#########################################
# Commands
#########################################
def state_command(settings: Settings):
    state, _ = build_state(settings)
    write_json(settings.run.out, state_to_dict(state))
    write_metadata(settings.run.out, 'state', _params(settings), state.n_max)
# End of state_command()


def dressed_command(settings: Settings):
    """Writes the dressed coordinates and their profile as JSON, or D_n as an "n,D" CSV.
    """
    state, _ = build_state(settings)
    coords = to_dressed(state)
    if settings.run.format == 'json':
        data = coords_to_dict(coords)
        data['profile'] = profile_to_dict(dressedness_profile(coords))
        write_json(settings.run.out, data)
    else:
        write_csv(settings.run.out, constants.PROFILE_HEADER, profile_rows(dressedness_profile(coords)))
    write_metadata(settings.run.out, 'dressed', _params(settings), coords.n_max)
# End of dressed_command()


def bound_command(settings: Settings):
    """Writes {"m", "w_minus1_sq", "s_min", "n_min", "n_min_estimate"}.
    """
    state, zz = build_state(settings)
    coords = to_dressed(state)
    profile = dressedness_profile(coords)
    n_min, estimate = dressedness_minimum(coords, zz if settings.run.family == 'zz' else None)
    report = {
        'm': profile.m,
        'w_minus1_sq': profile.w_minus1_sq,
        's_min': entropy_floor(profile.m),
        'n_min': n_min,
        'n_min_estimate': estimate,
    }
    write_json(settings.run.out, report)
    write_metadata(settings.run.out, 'bound', _params(settings), coords.n_max)
# End of bound_command()


def evolve_command(settings: Settings):
    """Samples the exact inversion, its stationary-phase approximation, or both side by side.
    """
    state, zz = build_state(settings)
    header, rows = _inversion_table(settings, state, zz, settings.run.mode)
    if settings.run.format == 'json':
        write_json(settings.run.out, {name: rows[:, column] for column, name in enumerate(header.split(','))})
    else:
        write_csv(settings.run.out, header, rows)
    write_metadata(settings.run.out, 'evolve', _params(settings), state.n_max)
# End of evolve_command()


def revival_command(settings: Settings):
    """CSV: exact against approximate inversion with the active revival index. JSON: validity reports for
    k = 1..k_max.
    """
    state, zz = build_state(settings)
    if settings.run.format == 'json':
        _, profile = build_envelope(settings, state, zz)
        stride = 1
        if settings.run.family == 'eo':
            profile, stride = DressednessProfile(profile.D[0::2], None, profile.w_minus1_sq), 2
        reports = [validity_to_dict(validity(k, profile, stride)) for k in range(1, settings.revival.k_max + 1)]
        write_json(settings.run.out, reports)
    else:
        header, rows = _inversion_table(settings, state, zz, 'both')
        write_csv(settings.run.out, header, rows)
    write_metadata(settings.run.out, 'revival', _params(settings), state.n_max)
# End of revival_command()


def reproduce_command(settings: Settings):
    """Writes the dataset of one figure panel to --out, plus its metadata file.
    """
    figure = settings.run.figure
    preset = presets.PRESETS[figure]
    panels = presets.figure_panels(figure, settings.run.phase_diff)
    settings.run.update({'family': preset.family, 'alpha_re': presets.ALPHA, 'alpha_im': 0.0})
    settings.run.phase_diff = None
    if preset.kind == 'profile':
        columns = [zz_profile(presets.ALPHA, gamma, xi, settings.model_params()).D for gamma, xi in panels]
        rows = np.column_stack([np.arange(columns[0].size)] + columns)
        n_max = columns[0].size - 1
    else:
        gamma, xi = panels[0]
        settings.run.update({'gamma': gamma, 'xi': xi})
        if preset.kind == 'approximation':
            settings.revival.update({'k_max': presets.FIGURE5_K_MAX})
        state, zz = build_state(settings)
        mode = 'exact' if preset.kind == 'inversion' else 'both'
        _, rows = _inversion_table(settings, state, zz, mode)
        n_max = state.n_max
    write_csv(settings.run.out, preset.header, rows)
    params = _params(settings)
    params['panels'] = [{'gamma': gamma, 'xi': xi} for gamma, xi in panels]
    write_metadata(settings.run.out, 'reproduce', params, n_max)
# End of reproduce_command()


COMMANDS = {
    'state': state_command,
    'dressed': dressed_command,
    'bound': bound_command,
    'evolve': evolve_command,
    'revival': revival_command,
    'reproduce': reproduce_command,
}


def _fail(message: str, exit_code: int) -> int:
    Logger().error(message)
    sys.stderr.write("jcm-trap: error: {}{}".format(message, constants.NEWLINE))
    return exit_code
# End of _fail()


@info('Running a command')
def run(settings: Settings) -> int:
    """Runs the configured command.

    Params:
    - settings (Settings): The run settings

    Return:
    - exit_code (int): 0 on success, 2 for invalid arguments or a phase profile that cannot be interpolated, 3 for a
      truncation beyond the hard cap, 4 for a quadrature failure
    """
    try:
        settings.run.validate(settings.grid)
        COMMANDS[settings.run.command](settings)
    except (DomainError, UnwrapError, OSError) as err:
        return _fail(str(err), constants.EXIT_INVALID_ARGUMENTS)
    except TruncationError as err:
        return _fail(str(err), constants.EXIT_TRUNCATION)
    except QuadratureError as err:
        return _fail(str(err), constants.EXIT_QUADRATURE)
    return constants.EXIT_OK
# End of run()


def main(argv: list = None) -> int:
    """Parses the arguments, sets up the logger and runs the command.

    Params:
    - argv (list<str>): The arguments (default: sys.argv[1:])

    Return:
    - exit_code (int): The process exit code
    """
    try:
        args = parse_arguments(argv)
    except SystemExit as exit_request:
        return exit_request.code
    try:
        settings = Settings(args)
    except (DomainError, OSError, yaml.YAMLError) as err:
        sys.stderr.write("jcm-trap: error: {}{}".format(err, constants.NEWLINE))
        return constants.EXIT_INVALID_ARGUMENTS
    Logger(settings.logging.log_dir)
    return run(settings)
# End of main()
