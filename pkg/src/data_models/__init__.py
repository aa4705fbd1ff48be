from .command_config import Command, CommandConfig
from .context_file import ContextFile
from .model_file import ModelFile, ValuationItem
from .oracle_file import InjectionItem, OracleFile, StageItem

__all__ = [
    "Command",
    "CommandConfig",
    "ContextFile",
    "InjectionItem",
    "ModelFile",
    "OracleFile",
    "StageItem",
    "ValuationItem",
]
