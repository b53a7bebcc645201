"""A collection of Namespaces for the different run settings.

@since 0.1.0
"""
import argparse
import math

import yaml

from . import constants
from .errors import DomainError
from .states import ModelParams
from .utils import wrap_angle


class SettingsNamespace(object):
    """An extensible Namespace object for easy accessibility to inner variables.
    """

    def __init__(self, parameters: dict = None):
        """Creates a SettingsNamespace out of the given dictionary object.

        Params:
        - parameters (dict[str, Any]): The parameters with which to update the settings namespace. If none are given,
                                       does nothing.
        """
        self.update(parameters)
    # End of __init__()

    def __str__(self):
        """Creates a string representation of the namespace, its class name followed by all the variables it holds.
        """
        return "{}: {}".format(self.__class__.__name__, self.__dict__)
    # End of __str__()

    def update(self, parameters: dict):
        """Updates the namespace with the given parameters. Parameters that are None are skipped, so that an
        argument left unset on the command line does not overwrite a configured value.

        Params:
        - parameters (dict[str, Any]): The parameters with which to update the settings namespace. If none are given,
                                       does nothing.
        """
        if parameters:
            self.__dict__.update({key: value for key, value in parameters.items() if value is not None})
    # End of update()

    def to_dict(self) -> dict:
        return dict(self.__dict__)
    # End of to_dict()
# End of SettingsNamespace


class ModelSettings(SettingsNamespace):
    """A namespace object for the truncation settings shared by every state constructor.
    """

    def __init__(self, parameters: dict = None):
        self.coupling = constants.COUPLING
        self.n_max = constants.N_MAX
        self.tail_tolerance = constants.TAIL_TOLERANCE
        self.hard_cap = constants.HARD_CAP
        SettingsNamespace.__init__(self, parameters)
    # End of __init__()
# End of ModelSettings


class LoggingSettings(SettingsNamespace):
    """A namespace object for storing the settings for the logger.
    """

    def __init__(self, parameters: dict = None):
        self.log_dir = constants.LOG_DIR
        SettingsNamespace.__init__(self, parameters)
    # End of __init__()
# End of LoggingSettings


class GridSettings(SettingsNamespace):
    """A namespace object for the time grid and the number of worker processes sampling it.
    """

    def __init__(self, parameters: dict = None):
        self.tau_max = constants.TAU_MAX
        self.samples = constants.SAMPLES
        self.workers = constants.WORKERS
        SettingsNamespace.__init__(self, parameters)
    # End of __init__()
# End of GridSettings


class RevivalSettings(SettingsNamespace):
    """A namespace object for the stationary-phase approximation and its quadrature.
    """

    def __init__(self, parameters: dict = None):
        self.k_max = constants.K_MAX
        self.interpolation = constants.INTERPOLATION
        self.quad_abs_tolerance = constants.QUAD_ABS_TOLERANCE
        self.quad_limit = constants.QUAD_LIMIT
        self.quad_fail_tolerance = constants.QUAD_FAIL_TOLERANCE
        SettingsNamespace.__init__(self, parameters)
    # End of __init__()

    def quad_options(self) -> dict:
        """Return:
        - options (dict): The keyword arguments collapse_term takes for its quadrature
        """
        return {
            'abs_tolerance': self.quad_abs_tolerance,
            'limit': self.quad_limit,
            'fail_tolerance': self.quad_fail_tolerance,
        }
    # End of quad_options()
# End of RevivalSettings


class RunConfig(SettingsNamespace):
    """A namespace object for what a single command-line run computes: the command, the state family and its
    parameters, and where the output goes.
    """

    def __init__(self, parameters: dict = None):
        self.command = None
        self.family = constants.FAMILY
        self.alpha_re = constants.ALPHA_RE
        self.alpha_im = constants.ALPHA_IM
        self.gamma = constants.GAMMA
        self.xi = constants.XI
        self.phase_diff = None
        self.z_re = constants.Z_RE
        self.z_im = constants.Z_IM
        self.signs_file = None
        self.parity = constants.PARITY
        self.mode = constants.MODE
        self.figure = None
        self.out = None
        self.format = constants.FORMAT
        SettingsNamespace.__init__(self, parameters)
    # End of __init__()

    @property
    def alpha(self) -> complex:
        return complex(self.alpha_re, self.alpha_im)
    # End of alpha()

    @property
    def z(self) -> complex:
        return complex(self.z_re, self.z_im)
    # End of z()

    def atomic_phase(self) -> float:
        """Return:
        - xi (float): ξ, or (ν_α - Δ) mod 2π when a phase difference Δ was given instead
        """
        if self.phase_diff is None:
            return self.xi
        return float(wrap_angle(math.atan2(self.alpha_im, self.alpha_re) - self.phase_diff))
    # End of atomic_phase()

    def validate(self, grid: GridSettings):
        """Checks the run against the grid it will be sampled on.

        Params:
        - grid (GridSettings): The time grid settings

        Raises:
        - DomainError: on an unknown command, family, mode or format, a grid with fewer than 2 samples or a
          non-positive horizon, or a reproduce run without a figure or an output path
        """
        checks = [
            (self.command in constants.COMMAND_CHOICES, "Unknown command {}".format(self.command)),
            (self.family in constants.FAMILY_CHOICES, "Exactly one state family out of {} must be selected".format(
                constants.FAMILY_CHOICES)),
            (self.mode in constants.MODE_CHOICES, "Unknown mode {}".format(self.mode)),
            (self.format in constants.FORMAT_CHOICES, "Unknown format {}".format(self.format)),
            (int(grid.samples) == grid.samples and grid.samples >= 2, "The grid needs at least 2 samples"),
            (grid.tau_max > 0 and math.isfinite(grid.tau_max), "The grid horizon tau_max must be > 0"),
        ]
        if self.command == 'reproduce':
            checks.append((self.figure in constants.FIGURE_CHOICES, "reproduce needs --figure out of {}".format(
                constants.FIGURE_CHOICES)))
            checks.append((self.out is not None, "reproduce needs an --out path"))
        for passed, message in checks:
            if not passed:
                raise DomainError(message)
    # End of validate()
# End of RunConfig


class Settings(object):
    """Collection of Namespaces that separates settings into groups based on their function.
    Defaults come from the constants module, are overridden by an optional YAML config file (sections model,
    logging, grid and revival), which in turn is overridden by every command-line argument that was given.
    """

    SECTIONS = ['model', 'logging', 'grid', 'revival']

    def __init__(self, args: argparse.Namespace = None, config_file: str = None):
        """Creates the Settings.

        Params:
        - args (argparse.Namespace): Parsed command-line arguments, if any
        - config_file (str): Path to a YAML config file. Defaults to args.config_file when args are given
        """
        self.model = ModelSettings()
        self.logging = LoggingSettings()
        self.grid = GridSettings()
        self.revival = RevivalSettings()
        self.run = RunConfig()
        if config_file is None and args is not None:
            config_file = getattr(args, 'config_file', None)
        if config_file is not None:
            for namespace, section in zip(self._groups(), self._parse_config_yml(config_file)):
                namespace.update(section)
        if args is not None:
            for namespace, subset in zip(self._groups() + [self.run], self._parse_config_args(args)):
                namespace.update(subset)
    # End of __init__()

    def __str__(self) -> str:
        """Creates a string representation of the Settings object by printing out every sub-settings object on a new
        line.
        """
        subsettings = self._groups() + [self.run]
        return "{}: \n\t{}".format(self.__class__.__name__, "\n\t".join(map(str, subsettings)))
    # End of __str__()

    def _groups(self) -> list:
        return [self.model, self.logging, self.grid, self.revival]
    # End of _groups()

    def _parse_config_yml(self, config_file: str) -> tuple:
        """Parses the YAML config file into one dictionary per section.

        Params:
        - config_file (string): The path to the config file from which to load settings

        Return:
        - config_dicts (tuple<dict>): The model, logging, grid and revival sections

        Raises:
        - DomainError: if the file does not hold a mapping, or holds an unknown section or key
        """
        yaml_settings = self._read_yml(config_file) or dict()
        if not isinstance(yaml_settings, dict):
            raise DomainError("The config file {} must hold a mapping".format(config_file))
        unknown = set(yaml_settings) - set(self.SECTIONS)
        if unknown:
            raise DomainError("Unknown config sections: {}".format(sorted(unknown)))
        sections = tuple(yaml_settings.get(name) or dict() for name in self.SECTIONS)
        for name, section, namespace in zip(self.SECTIONS, sections, self._groups()):
            extra = set(section) - set(vars(namespace))
            if extra:
                raise DomainError("Unknown keys in config section {}: {}".format(name, sorted(extra)))
        return sections
    # End of _parse_config_yml()

    def _read_yml(self, yml_file: str) -> dict:
        """Reads the contents of a YAML file and returns the file contents as a dictionary.

        Params:
        - yml_file (string): The path to the YAML file

        Return:
        - yml_contents (dict<string, any>): A dictionary containing the contents of the YAML file
        """
        with open(yml_file, 'r') as stream:
            yml_contents = yaml.safe_load(stream)
        return yml_contents
    # End of _read_yml()

    def _parse_config_args(self, args: argparse.Namespace) -> tuple:
        """Splits the command-line arguments into one dictionary per namespace.

        Params:
        - args (argparse.Namespace): The command-line arguments passed in to the program

        Return:
        - arg_dictionaries (tuple<dict>): The model, logging, grid, revival and run subsets
        """
        namespaces = self._groups() + [self.run]
        return tuple(self._get_arg_subset(args, vars(namespace).keys()) for namespace in namespaces)
    # End of _parse_config_args()

    def _get_arg_subset(self, args: argparse.Namespace, arg_keys: list) -> dict:
        """Creates a dictionary containing the given keys from the command_line args.

        Params:
        - args (argparse.Namespace): The command-line arguments passed in to the program
        - arg_keys (list<str>): The keys that form this argument group

        Return:
        - arg_subset(dict<string, any>): The arguments of this group that were present
        """
        arg_dict = vars(args)
        return {arg_key: arg_dict[arg_key] for arg_key in arg_keys if arg_key in arg_dict}
    # End of _get_arg_subset()

    def model_params(self) -> ModelParams:
        """Return:
        - params (ModelParams): The validated truncation settings
        """
        return ModelParams(self.model.coupling, self.model.n_max, self.model.tail_tolerance, self.model.hard_cap)
    # End of model_params()
# End of Settings()
