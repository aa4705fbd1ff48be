from .base import BaseModarithException


class ProfileError(BaseModarithException):
    """Exception raised when a substitution profile is invalid or doesn't cover the variables of
    the compiled objects"""

    pass
