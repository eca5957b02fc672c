"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

from typing import Optional, Union, ClassVar


class MieRingError(Exception):
    """Base class for inheritance for mie_ring errors.

    Every error raised deliberately by this package is derived from this class, so callers can
    catch all of them with a single except clause. The message has the form
    ``error code: CODE: message``.
    """

    _error_code: Union[int, str]
    _error_message: Optional[str]

    def __init__(
        self, error_code: Union[int, str], error_message: Optional[str] = None
    ):
        if isinstance(error_code, str):
            error_code = error_code.strip()
        self._error_code = error_code
        self._error_message = error_message
        super().__init__(
            "error code"
            + (": " if self._error_message is None else " ")
            + str(self._error_code)
            + (": " + self._error_message if self._error_message is not None else "")
        )

    @property
    def errorCode(self) -> Union[int, str]:
        return self._error_code

    @property
    def errorMessage(self) -> Optional[str]:
        return self._error_message


class MieRingDomainError(MieRingError, ValueError):
    """Exception which is thrown when an argument lies outside the domain of a function.

    Examples are a non-positive Gegenbauer parameter, a negative radius or a Laguerre parameter
    not above -1.
    """

    def __init__(self, error_message: str):
        super().__init__("domain", error_message)
        return


class MieRingSingularityError(MieRingDomainError):
    """Exception which is thrown when an expression is evaluated at one of its poles.

    This covers the ring term on the polar axis, closed forms whose denominator vanishes and
    integrals that diverge for the requested parameter.
    """

    def __init__(self, error_message: str):
        MieRingError.__init__(self, "singular", error_message)
        return


class MieRingUnboundStateError(MieRingDomainError):
    """Exception which is thrown when the requested state is not bound, i.e. c - E <= 0."""

    def __init__(self, error_message: str):
        MieRingError.__init__(self, "unbound", error_message)
        return


class MieRingConvergenceError(MieRingError, ArithmeticError):
    """Exception which is thrown when a numerical oracle did not converge.

    Quadratures compare two orders, eigensolvers compare two refinement levels. If the difference
    exceeds the tolerance this exception is raised instead of returning an unreliable number.
    """

    def __init__(self, error_message: str):
        super().__init__("convergence", error_message)
        return


class MieRingCatalogError(MieRingError):
    """Exception which is thrown when the molecule catalog can not be used.

    See static attribute `_message_strings` for possible specializations.
    """

    _message_strings: ClassVar[dict[int, str]] = {
        1: "malformed catalog row",
        2: "non-positive spectroscopic constant",
        3: "molecule not in catalog",
        4: "catalog file not readable",
        5: "malformed golden data row",
    }
    """associates an error number with a human-readable error description"""

    def __init__(self, error_code: int, detail: Optional[str] = None):
        message = (
            self._message_strings[error_code]
            if error_code in self._message_strings
            else "unknown catalog error"
        )
        if detail is not None:
            message += ": " + detail
        super().__init__(error_code, message)
        return


class MieRingConfigError(MieRingError):
    """Exception which is thrown when a run configuration is invalid.

    The command line interface terminates with exit status 2 for this exception.
    """

    def __init__(self, error_message: str):
        super().__init__("config", error_message)
        return


class MieRingVerificationError(MieRingError):
    """Exception which is thrown when the verification suite found failing cases."""

    failures: list

    def __init__(self, failures: list):
        self.failures = list(failures)
        super().__init__(
            "verification", f"{len(self.failures)} check(s) failed"
        )
        return
