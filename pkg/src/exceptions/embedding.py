from .base import BaseModarithException, InputError


class SentenceValidError(BaseModarithException):
    """Exception raised when embedding a sentence that is forced at the chosen world"""

    pass


class ModePreconditionError(BaseModarithException):
    """Exception raised when a model doesn't meet the requirements of the embedding mode"""

    pass


class UncoveredPredicateError(BaseModarithException):
    """Exception raised when interpreting a predicate that is not in the interpretation table"""

    pass


class ThetaFamilyError(BaseModarithException):
    """Exception raised when a θ family fails the existence, disjointness or covering check"""

    pass


class ElementOutsideDomainError(InputError):
    """Exception raised when a θ formula is requested for an element outside its domain"""

    pass


class UnknownModeError(InputError):
    """Exception raised when an embedding mode is not one of the known modes"""

    pass
