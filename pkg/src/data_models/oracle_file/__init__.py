from .oracle_file import InjectionItem, OracleFile, StageItem

__all__ = ["InjectionItem", "OracleFile", "StageItem"]
