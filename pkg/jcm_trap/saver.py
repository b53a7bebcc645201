"""Writes the deterministic data files: CSV tables, JSON documents and the metadata file that accompanies every
output written to a path.

@since 0.1.0
"""

import io
import json
import sys
from typing import Any

import numpy as np

from . import constants
from .errors import DomainError
from .logger import debug
from .utils import create_directory


def to_jsonable(data: Any) -> Any:
    """Converts numpy values nested in dicts, lists and tuples into plain python values.

    Raises:
    - DomainError: on a non-finite number
    """
    if isinstance(data, dict):
        return {str(key): to_jsonable(value) for key, value in data.items()}
    if isinstance(data, (list, tuple, np.ndarray)):
        return [to_jsonable(value) for value in data]
    if isinstance(data, (bool, np.bool_)):
        return bool(data)
    if isinstance(data, (int, np.integer)):
        return int(data)
    if isinstance(data, (float, np.floating)):
        if not np.isfinite(data):
            raise DomainError("Refusing to write the non-finite number {}".format(data))
        return float(data)
    return data
# End of to_jsonable()


def json_text(data: Any) -> str:
    """Return:
    - text (str): data as two-space indented JSON with a trailing newline
    """
    return json.dumps(to_jsonable(data), indent=2, allow_nan=False) + constants.NEWLINE
# End of json_text()


def csv_text(header: str, rows: Any) -> str:
    """Formats a table with one %.17g number per cell.

    Params:
    - header (str): The comma-separated column names
    - rows (array-like): A 2D table with one column per header entry

    Return:
    - text (str): The CSV text, LF line endings

    Raises:
    - DomainError: on a non-finite number or a column count that does not match the header
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    if rows.size and rows.shape[1] != len(header.split(',')):
        raise DomainError("The table has {} columns but the header names {}".format(rows.shape[1], header))
    if not np.all(np.isfinite(rows)):
        raise DomainError("Refusing to write non-finite numbers")
    stream = io.StringIO()
    np.savetxt(stream, rows, fmt=constants.FLOAT_FORMAT, delimiter=',', newline=constants.NEWLINE, header=header,
               comments='')
    return stream.getvalue()
# End of csv_text()


@debug('Writing an output file')
def write_text(path: str, text: str):
    """Writes text to the path, or to stdout when the path is None.

    Params:
    - path (str): The output path, or None
    - text (str): The contents
    """
    if path is None:
        sys.stdout.write(text)
        return
    create_directory(path)
    with open(path, 'w', newline='') as output:
        output.write(text)
# End of write_text()


def write_json(path: str, data: Any):
    write_text(path, json_text(data))
# End of write_json()


def write_csv(path: str, header: str, rows: Any):
    write_text(path, csv_text(header, rows))
# End of write_csv()


def metadata(command: str, params: dict, n_max: int) -> dict:
    """The metadata document {"command", "params", "n_max", "version"}.
    """
    from . import __version__
    return {'command': command, 'params': params, 'n_max': n_max, 'version': __version__}
# End of metadata()


def write_metadata(path: str, command: str, params: dict, n_max: int):
    """Writes <path>.meta.json next to an output file. Nothing is written for stdout output.
    """
    if path is not None:
        write_json(path + constants.META_SUFFIX, metadata(command, params, n_max))
# End of write_metadata()
