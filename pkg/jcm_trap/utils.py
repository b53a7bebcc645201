"""Holds different utility functions that don't entirely fit in any other module.

@since 0.1.0
"""

import math
import os
from typing import Any

import numpy as np

from . import constants


def create_directory(directory: str):
    """Creates the parent directory of the given path if it does not exist.

    Params:
    - directory (str): The path whose directory is to be created. A trailing slash creates the directory itself

    Raises:
    - OSError: if the directory creation fails
    """
    parent = os.path.dirname(directory)
    if parent:
        os.makedirs(parent, exist_ok=True)
# End of create_directory()


class Singleton(type):
    """Singleton metaclass. Objects that inherit this become Singleton objects. This implementation makes it so that
    subsequent calls to the Singleton class do not invoke the __init__() method.
    """

    _instances = {}  # Set of Singleton classes currently in use

    def __call__(cls: Any, *args: tuple, **kwargs: dict):
        """Whenever the Singleton class is declared, checks if an instance of that class has already been initiated.
        If it has, then return that instance. Otherwise, return a new instance.
        """
        if cls not in cls._instances:
            cls._instances[cls] = super(Singleton, cls).__call__(*args, **kwargs)
        return cls._instances[cls]
    # End of __call__()
# End of Singleton()


def wrap_angle(angles: Any) -> np.ndarray:
    """Maps angles onto [0, 2π).

    Params:
    - angles (float or np.ndarray): The angles, in radians

    Return:
    - wrapped (np.ndarray): The angles reduced into [0, 2π)
    """
    wrapped = np.mod(np.asarray(angles, dtype=float), constants.TWO_PI)
    # np.mod can round a tiny negative input up to exactly 2π
    return np.where(wrapped >= constants.TWO_PI, 0.0, wrapped)
# End of wrap_angle()


def reduced_phase(frequencies: np.ndarray, tau: Any) -> np.ndarray:
    """Computes (frequency * tau) mod 2π. The product is reduced with fmod, which is exact, so that later
    subtractions from small phases keep their precision at large times.

    Params:
    - frequencies (np.ndarray): Angular frequencies in scaled units
    - tau (float or np.ndarray): Scaled time(s). An array of times gives one row per time

    Return:
    - phase (np.ndarray): The reduced phases
    """
    tau = np.asarray(tau, dtype=float)
    return np.fmod(np.multiply.outer(tau, frequencies), constants.TWO_PI)
# End of reduced_phase()


def compensated_sum(values: Any) -> float:
    """Sums the given values with math.fsum, which tracks the exact partial sums.

    Params:
    - values (iterable of float): The values to sum

    Return:
    - total (float): The correctly rounded sum
    """
    return math.fsum(np.ravel(values))
# End of compensated_sum()


def compensated_row_sums(matrix: np.ndarray) -> np.ndarray:
    """Applies compensated_sum to every row of a 2D array.

    Params:
    - matrix (np.ndarray): The rows to sum

    Return:
    - totals (np.ndarray): One correctly rounded sum per row
    """
    return np.array([math.fsum(row) for row in np.atleast_2d(matrix)], dtype=float)
# End of compensated_row_sums()
