from collections.abc import Sequence


# Base exception
class MonoCodesError(Exception):
    """Base exception for the monomial-codes library"""

    def __init__(self, message: str, error_code: str | None = None):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


# Input exceptions
class InvalidInputError(MonoCodesError, ValueError):
    """Raised when text, files or parameters are malformed or out of range"""

    def __init__(self, message: str, error_code: str | None = "invalid_input"):
        super().__init__(message, error_code)


class IncompatibleMonomialsError(InvalidInputError):
    """Raised when two monomials live over different variable counts"""

    def __init__(self, m_left: int, m_right: int):
        super().__init__(f"incompatible variable counts: {m_left} != {m_right}", "incompatible_monomials")


class ChannelError(InvalidInputError):
    """Raised when a channel table is not a valid binary-input symmetric channel"""

    def __init__(self, message: str):
        super().__init__(message, "invalid_channel")


# Algebraic preconditions
class NotDecreasingError(MonoCodesError, ValueError):
    """Raised when a formula that needs a decreasing monomial set gets anything else"""

    def __init__(self, message: str = "duality formula requires decreasing I"):
        super().__init__(message, "not_decreasing")


class UndefinedQuantityError(MonoCodesError, ValueError):
    """Raised when a parameter is undefined for the given code (empty code, zero dual, ...)"""

    def __init__(self, message: str):
        super().__init__(message, "undefined")


# Resources
class ResourceCapError(MonoCodesError):
    """Raised when an operation would exceed a configured size cap"""

    def __init__(self, what: str, value: int, cap: int, setting: str):
        self.value = value
        self.cap = cap
        self.setting = setting
        super().__init__(f"{what} {value} exceeds cap {cap} (setting {setting})", "resource_cap")


# Verification
class CheckFailedError(MonoCodesError):
    """Raised when one or more verification checks fail"""

    def __init__(self, failed: Sequence[str]):
        self.failed = list(failed)
        super().__init__(f"checks failed: {', '.join(self.failed)}", "check_failed")
