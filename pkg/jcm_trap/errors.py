"""Custom errors raised by the jcm_trap package.

@since 0.1.0
"""


class JCMError(Exception):
    """Base class for every error raised on purpose by this package.
    """
# End of JCMError()


class DomainError(JCMError, ValueError):
    """Raised when an argument lies outside the domain an operation is defined on.
    """
# End of DomainError()


class TruncationError(JCMError):
    """Raised when the Fock-space truncation required by a tail tolerance exceeds the hard cap.

    Instance Variables:
    - required (int): The smallest truncation that would have met the tolerance, or the cap if it was never reached
    - hard_cap (int): The configured maximum truncation
    """

    def __init__(self, message: str, required: int, hard_cap: int):
        """Creates a TruncationError.

        Params:
        - message (str): Description of the failure
        - required (int): The truncation that was needed
        - hard_cap (int): The configured maximum truncation
        """
        super().__init__(message)
        self.required = required
        self.hard_cap = hard_cap
    # End of __init__()
# End of TruncationError()


class QuadratureError(JCMError):
    """Raised when adaptive quadrature fails to converge.

    Instance Variables:
    - error_estimate (float): The absolute error estimate the integrator achieved
    """

    def __init__(self, message: str, error_estimate: float):
        """Creates a QuadratureError. The achieved error estimate is appended to the message.

        Params:
        - message (str): Description of the failure
        - error_estimate (float): The absolute error estimate the integrator achieved
        """
        super().__init__("{} (achieved error estimate {:.3e})".format(message, error_estimate))
        self.error_estimate = error_estimate
    # End of __init__()
# End of QuadratureError()


class UnwrapError(JCMError):
    """Raised when a sampled phase profile jumps too much between neighbouring shells to be interpolated.
    """
# End of UnwrapError()


class SignsFileError(DomainError):
    """Raised when a signs file holds anything other than one '+1' or '-1' token per line.

    Instance Variables:
    - line_number (int): The 1-based line holding the offending token
    """

    def __init__(self, message: str, line_number: int):
        """Creates a SignsFileError.

        Params:
        - message (str): Description of the bad token
        - line_number (int): The 1-based line holding the offending token
        """
        super().__init__("line {}: {}".format(line_number, message))
        self.line_number = line_number
    # End of __init__()
# End of SignsFileError()
