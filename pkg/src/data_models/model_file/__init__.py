from .model_file import ModelFile, ValuationItem

__all__ = ["ModelFile", "ValuationItem"]
