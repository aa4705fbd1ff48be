from .base import EnumerationLimitError


class TooManyVariablesError(EnumerationLimitError):
    """Exception raised when a propositional formula has more variables than the configured
    truth table limit"""

    pass
