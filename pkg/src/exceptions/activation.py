from .base import BaseModarithException, EnumerationLimitError


class StageMismatchError(BaseModarithException):
    """Exception raised when the theory stage of a context doesn't match the requested stage"""

    pass


class PartitionLimitError(EnumerationLimitError):
    """Exception raised when the set of atoms to partition is larger than the configured limit"""

    pass


class PartitionDomainError(BaseModarithException):
    """Exception raised when a partition is not over the expected set of atoms"""

    pass


class SearchLimitError(EnumerationLimitError):
    """Exception raised when a bounded search space is larger than the configured limit"""

    pass
