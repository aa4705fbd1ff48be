from .base import BaseModarithException, InputError


class FormulaSyntaxError(InputError):
    """Exception raised when a formula text does not follow the grammar"""

    line: int | None
    column: int | None

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line is None:
            return super().__str__()
        return f"{super().__str__()} (line {self.line}, column {self.column})"


class ArityError(InputError):
    """Exception raised when a predicate or opaque atom is used with the wrong number of
    arguments"""

    pass


class UnknownAtomError(InputError):
    """Exception raised when an opaque atom name is not in the supplied registry"""

    pass


class NotAFormulaError(BaseModarithException):
    """Exception raised when decoding a number that is not the code of any formula"""

    pass
