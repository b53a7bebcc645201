"""Wrapper for the python logging module - saves logs to multiple files based on severity level.

@since 0.1.0
"""

import logging
import logging.handlers
import os
from functools import wraps
from typing import Any, Callable

from . import constants
from .utils import create_directory, Singleton

# A message logged at a given severity is also written to every more verbose file
CASCADE = {
    constants.ERROR: [constants.ERROR, constants.INFO, constants.DEBUG, constants.TRACE],
    constants.INFO: [constants.INFO, constants.DEBUG, constants.TRACE],
    constants.DEBUG: [constants.DEBUG, constants.TRACE],
    constants.TRACE: [constants.TRACE],
}


class Logger(object, metaclass=Singleton):
    """Holds one python logger per severity level, each writing to its own rotating file in the log directory.
    Exposes `error()`, `info()`, `debug()` and `trace()`.

    Instance Variables:
    - log_directory (str): The directory holding the <Severity>.log files
    - loggers (dict[str, logging.Logger]): The file loggers, keyed by severity
    """

    def __init__(self, log_directory: str = None):
        """Creates the Logger. Only the first call has any effect, since the Logger is a Singleton.

        Params:
        - log_directory (str): The path to the directory where the logs should be stored (default: constants.LOG_DIR)
        """
        if log_directory is None:
            log_directory = constants.LOG_DIR
        self.log_directory = os.path.join(log_directory, '')
        create_directory(self.log_directory)
        self.loggers = {severity: self._create_logger(severity) for severity in CASCADE}
    # End of __init__()

    def _create_logger(self, severity_level: str) -> logging.Logger:
        """Creates a logger that writes everything it receives to <log_directory>/<severity_level>.log.

        Params:
        - severity_level (str): The severity level, also used to name the file

        Return:
        - logger (logging.Logger): The configured logger
        """
        logger = logging.getLogger(constants.LOGGER_PREFIX + severity_level)
        logger.setLevel(logging.INFO)  # Filtering happens through CASCADE, not through logging levels
        logger.propagate = False
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
        handler = logging.handlers.RotatingFileHandler(
            filename=self.log_directory + severity_level + '.log',
            maxBytes=1024*512,
            backupCount=5
        )
        handler.setFormatter(logging.Formatter("%(asctime)s %(message)s"))
        logger.addHandler(handler)
        return logger
    # End of _create_logger()

    def log(self, severity_level: str, message: str):
        """Logs a message at the given severity.

        Params:
        - severity_level (str): One of constants.ERROR, INFO, DEBUG or TRACE
        - message (str): The message to be logged
        """
        formatted = " %s:    %s" % (severity_level, message)
        for target in CASCADE[severity_level]:
            self.loggers[target].info(formatted)
    # End of log()

    def error(self, message: str):
        """Logs a message at the error severity level.
        """
        self.log(constants.ERROR, message)
    # End of error()

    def info(self, message: str):
        """Logs a message at the info severity level.
        """
        self.log(constants.INFO, message)
    # End of info()

    def debug(self, message: str):
        """Logs a message at the debug severity level.
        """
        self.log(constants.DEBUG, message)
    # End of debug()

    def trace(self, message: str):
        """Logs a message at the trace severity level.
        """
        self.log(constants.TRACE, message)
    # End of trace()
# End of Logger()


#
# Logging decorators that take a message and a logger as parameters
#
class LogDecorator(object):
    """Base class for the logging decorators. Subclasses only set the severity they log at.

    If no message is passed, the name of the decorated function is logged. If no logger is passed, the Logger
    Singleton is fetched (and created in the default directory if needed) on the first call.
    """

    severity = constants.DEBUG

    def __init__(self, message: str = None, logger: Logger = None):
        """Creates an instance of the log decorator.

        Params:
        - message (str): The message to be logged (default: None)
        - logger (Logger): The logger to be used (default: None)
        """
        self.message = message
        self.logger = logger
    # End of __init__()

    def __call__(self, function: Callable) -> Callable:
        """Wraps the function so that the message is logged right before each call.

        Params:
        - function (Callable): The function being decorated

        Return:
        - wrapped_function (Callable): The decorated function
        """
        message = self.message if self.message else function.__name__

        @wraps(function)
        def wrapped_function(*args: tuple, **kwargs: dict) -> Any:
            if self.logger is None:
                self.logger = Logger()
            self.logger.log(self.severity, message)
            return function(*args, **kwargs)
        # End of wrapped_function()

        return wrapped_function
    # End of __call__()
# End of LogDecorator()


class info(LogDecorator):
    """Logs at the info severity before the decorated call.
    """
    severity = constants.INFO
# End of info() decorator


class debug(LogDecorator):
    """Logs at the debug severity before the decorated call.
    """
    severity = constants.DEBUG
# End of debug() decorator


class trace(LogDecorator):
    """Logs at the trace severity before the decorated call.
    """
    severity = constants.TRACE
# End of trace() decorator
