from .command_config import Command, CommandConfig

__all__ = ["Command", "CommandConfig"]
