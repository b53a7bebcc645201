"""Shared fixtures.
"""
import pytest

from jcm_trap.logger import Logger


@pytest.fixture(scope='session', autouse=True)
def test_logger(tmp_path_factory):
    """Creates the Logger Singleton in a temporary directory before any decorated function runs.
    """
    return Logger(str(tmp_path_factory.mktemp('test-Logger')))
