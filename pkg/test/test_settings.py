"""Tests for jcm_trap.settings.
"""
import math

import pytest

from jcm_trap import constants
from jcm_trap.cmd_arg_parser import parse_arguments
from jcm_trap.errors import DomainError
from jcm_trap.settings import *


def write_config(tmp_path, text: str) -> str:
    path = tmp_path / 'config.yml'
    path.write_text(text)
    return str(path)


class TestSettingsNamespace():
    def test_should_skip_unset_values(self):
        run = RunConfig({'xi': None, 'out': None})
        assert run.xi == constants.XI
        assert run.out is None

    def test_should_override_defaults(self):
        assert GridSettings({'samples': 12}).samples == 12

    def test_should_list_its_values(self):
        assert LoggingSettings().to_dict() == {'log_dir': constants.LOG_DIR}

    def test_should_give_the_quadrature_options(self):
        assert RevivalSettings({'quad_limit': 5}).quad_options() == {
            'abs_tolerance': constants.QUAD_ABS_TOLERANCE,
            'limit': 5,
            'fail_tolerance': constants.QUAD_FAIL_TOLERANCE,
        }


class TestSettings():
    def test_should_fall_back_to_the_defaults(self):
        settings = Settings()
        assert settings.grid.samples == constants.SAMPLES
        assert settings.grid.tau_max == constants.TAU_MAX
        assert settings.revival.k_max == constants.K_MAX
        assert settings.model.hard_cap == constants.HARD_CAP

    def test_should_read_a_config_file(self, tmp_path):
        config = write_config(tmp_path, "grid:\n  samples: 10\nrevival:\n  k_max: 3\n")
        settings = Settings(config_file=config)
        assert settings.grid.samples == 10
        assert settings.revival.k_max == 3
        assert settings.grid.tau_max == constants.TAU_MAX

    def test_should_let_arguments_override_the_config_file(self, tmp_path):
        config = write_config(tmp_path, "grid:\n  samples: 10\n  tau_max: 5.0\n")
        settings = Settings(parse_arguments(['evolve', '--samples', '20', '--config', config]))
        assert settings.grid.samples == 20
        assert settings.grid.tau_max == 5.0
        assert settings.run.command == 'evolve'

    def test_should_accept_an_empty_config_file(self, tmp_path):
        assert Settings(config_file=write_config(tmp_path, "")).grid.samples == constants.SAMPLES

    def test_should_reject_an_unknown_section(self, tmp_path):
        with pytest.raises(DomainError):
            Settings(config_file=write_config(tmp_path, "plotting:\n  dpi: 300\n"))

    def test_should_reject_an_unknown_key(self, tmp_path):
        with pytest.raises(DomainError):
            Settings(config_file=write_config(tmp_path, "grid:\n  steps: 300\n"))

    def test_should_reject_a_config_file_that_is_not_a_mapping(self, tmp_path):
        with pytest.raises(DomainError):
            Settings(config_file=write_config(tmp_path, "- 1\n- 2\n"))

    def test_should_build_the_model_parameters(self, tmp_path):
        settings = Settings(config_file=write_config(tmp_path, "model:\n  n_max: 5\n  hard_cap: 50\n"))
        params = settings.model_params()
        assert params.n_max == 5
        assert params.hard_cap == 50

    def test_should_default_the_bound_command_to_the_even_odd_family(self):
        assert Settings(parse_arguments(['bound'])).run.family == 'eo'
        assert Settings(parse_arguments(['evolve'])).run.family == 'zz'


class TestRunConfig():
    def test_should_use_xi_without_a_phase_difference(self):
        assert RunConfig({'xi': 1.0}).atomic_phase() == 1.0

    def test_should_turn_a_phase_difference_into_an_atomic_phase(self):
        assert RunConfig({'phase_diff': math.pi / 2.0}).atomic_phase() == pytest.approx(1.5 * math.pi)
        run = RunConfig({'alpha_re': 0.0, 'alpha_im': 7.0, 'phase_diff': math.pi / 2.0})
        assert run.atomic_phase() == pytest.approx(0.0)

    def test_should_combine_the_complex_parameters(self):
        run = RunConfig({'alpha_re': 1.0, 'alpha_im': 2.0, 'z_re': 0.1, 'z_im': -0.2})
        assert run.alpha == 1.0 + 2.0j
        assert run.z == 0.1 - 0.2j

    def test_should_accept_a_valid_run(self):
        RunConfig({'command': 'evolve'}).validate(GridSettings())

    def test_should_reject_an_unknown_family(self):
        with pytest.raises(DomainError):
            RunConfig({'command': 'evolve', 'family': 'squeezed'}).validate(GridSettings())

    def test_should_reject_a_grid_with_one_sample(self):
        with pytest.raises(DomainError):
            RunConfig({'command': 'evolve'}).validate(GridSettings({'samples': 1}))

    def test_should_reject_a_non_positive_horizon(self):
        with pytest.raises(DomainError):
            RunConfig({'command': 'evolve'}).validate(GridSettings({'tau_max': 0.0}))

    def test_should_need_an_output_path_to_reproduce(self):
        with pytest.raises(DomainError):
            RunConfig({'command': 'reproduce', 'figure': '2a'}).validate(GridSettings())
