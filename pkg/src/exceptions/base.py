class BaseModarithException(Exception):
    def __str__(self) -> str:
        return self.__class__.__name__ + ": " + str(self.args[0])


class InputError(BaseModarithException):
    """Exception raised when an input provided by the user is malformed"""

    pass


class EnumerationLimitError(BaseModarithException):
    """Exception raised when a decision would go over a configured enumeration limit"""

    pass


class InvalidBoundError(InputError):
    """Exception raised when a numeric parameter such as a bound, an index or a horizon is outside
    its range"""

    pass
