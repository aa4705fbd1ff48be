from .base import BaseModarithException, InputError


class InvalidModelError(InputError):
    """Exception raised when a Kripke model breaks one of its structural invariants"""

    pass


class FreeVariableError(BaseModarithException):
    """Exception raised when evaluating a formula that still has free variables"""

    pass


class ParameterOutsideDomainError(BaseModarithException):
    """Exception raised when a formula mentions a constant outside the domain of the evaluating
    world"""

    pass


class NotRootedError(BaseModarithException):
    """Exception raised when a construction requires a rooted model and the model is not rooted
    at the expected world"""

    pass


class RootAdjunctionError(BaseModarithException):
    """Exception raised when a new root can't be adjoined below the model"""

    pass


class UnknownWorldError(InputError):
    """Exception raised when a world is requested that is not in the model or frame"""

    pass
