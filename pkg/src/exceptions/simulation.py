from .base import BaseModarithException, InputError


class NonCumulativeStageError(BaseModarithException):
    """Exception raised when an oracle stage drops a formula proved in an earlier stage"""

    pass


class InvalidOracleError(InputError):
    """Exception raised when a scripted oracle is built from malformed snapshots"""

    pass


class ScenarioError(InputError):
    """Exception raised when a scenario is requested with formulas it can't be built from"""

    pass
