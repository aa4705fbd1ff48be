from .context_file import ContextFile

__all__ = ["ContextFile"]
