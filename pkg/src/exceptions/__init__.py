from .activation import (
    PartitionDomainError,
    PartitionLimitError,
    SearchLimitError,
    StageMismatchError,
)
from .base import BaseModarithException, EnumerationLimitError, InputError, InvalidBoundError
from .commands import InputFileError
from .embedding import (
    ElementOutsideDomainError,
    ModePreconditionError,
    SentenceValidError,
    ThetaFamilyError,
    UncoveredPredicateError,
    UnknownModeError,
)
from .formulas import ArityError, FormulaSyntaxError, NotAFormulaError, UnknownAtomError
from .identity import ProfileError
from .kripke import (
    FreeVariableError,
    InvalidModelError,
    NotRootedError,
    ParameterOutsideDomainError,
    RootAdjunctionError,
    UnknownWorldError,
)
from .proptaut import TooManyVariablesError
from .simulation import InvalidOracleError, NonCumulativeStageError, ScenarioError
from .successor import NotASentenceError, NotSuccessorFormulaError

__all__ = [
    "ArityError",
    "BaseModarithException",
    "ElementOutsideDomainError",
    "EnumerationLimitError",
    "FormulaSyntaxError",
    "FreeVariableError",
    "InputError",
    "InputFileError",
    "InvalidBoundError",
    "InvalidModelError",
    "InvalidOracleError",
    "ModePreconditionError",
    "NonCumulativeStageError",
    "NotAFormulaError",
    "NotASentenceError",
    "NotRootedError",
    "NotSuccessorFormulaError",
    "ParameterOutsideDomainError",
    "PartitionDomainError",
    "PartitionLimitError",
    "ProfileError",
    "RootAdjunctionError",
    "ScenarioError",
    "SearchLimitError",
    "SentenceValidError",
    "StageMismatchError",
    "ThetaFamilyError",
    "TooManyVariablesError",
    "UncoveredPredicateError",
    "UnknownAtomError",
    "UnknownModeError",
    "UnknownWorldError",
]
