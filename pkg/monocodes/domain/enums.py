from enum import Enum, IntEnum


class Sign(str, Enum):
    """Polarisation step: '+' is the better synthetic channel, '-' the worse."""

    PLUS = "+"
    MINUS = "-"


class ChannelKind(str, Enum):
    """Channel families accepted in channel spec strings."""

    BEC = "bec"
    BSC = "bsc"
    TABLE = "table"


class CheckStatus(str, Enum):
    OK = "ok"
    FAILED = "failed"
    SKIPPED = "skipped"


class ExitCode(IntEnum):
    """Process exit codes of the command-line front end."""

    SUCCESS = 0
    CHECK_FAILURE = 1
    USAGE_ERROR = 2
    RESOURCE_CAP = 3
