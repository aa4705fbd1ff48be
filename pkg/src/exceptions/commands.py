from .base import InputError


class InputFileError(InputError):
    """Exception raised when an input file can't be read or doesn't follow its format"""

    path: str

    def __init__(self, path: str, message: str) -> None:
        super().__init__(message)
        self.path = path

    def __str__(self) -> str:
        return f"{self.__class__.__name__}: {self.path}: {self.args[0]}"
