from .base import BaseModarithException


class NotSuccessorFormulaError(BaseModarithException):
    """Exception raised when a formula uses symbols outside the language {0, s, =}"""

    pass


class NotASentenceError(BaseModarithException):
    """Exception raised when deciding a formula that has free variables"""

    pass
