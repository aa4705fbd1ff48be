import json
import logging
import sys
from typing import Literal

from configs import configs

LogLevel = Literal["none", "error", "warning", "default", "debug"]


class FriendlyFormatter(logging.Formatter):
    GREY = "\x1b[38;20m"
    YELLOW = "\x1b[33;20m"
    RED = "\x1b[31;20m"
    BOLD_RED = "\x1b[31;1m"
    RESET_COLOR = "\x1b[0m"

    COLOR_FORMAT = {
        logging.DEBUG: (GREY, RESET_COLOR),
        logging.INFO: (GREY, RESET_COLOR),
        logging.WARNING: (YELLOW, RESET_COLOR),
        logging.ERROR: (RED, RESET_COLOR),
        logging.CRITICAL: (BOLD_RED, RESET_COLOR),
    }

    _formatter: logging.Formatter

    def __init__(self, log_format: str | None = None) -> None:
        if log_format is None:
            log_format = "%(asctime)s [%(levelname)s]: %(message)s"
        super().__init__(log_format)
        self._formatter = logging.Formatter(log_format)

    def format(self, record: logging.LogRecord) -> str:
        """Format the log record with the color of its level"""
        prefix, suffix = self.COLOR_FORMAT.get(record.levelno, ("", ""))
        return prefix + self._formatter.format(record) + suffix


class JsonFormatter(logging.Formatter):
    fields: dict[str, str]

    def __init__(self, fields: dict[str, str] | None = None) -> None:
        super().__init__()
        if fields is None:
            fields = {"message": "message"}
        self.fields = fields

    def format(self, record: logging.LogRecord) -> str:
        """Format the log record as a JSON object with the configured fields"""
        record.message = record.getMessage()
        message_dict = {
            key: getattr(record, record_field, None) for key, record_field in self.fields.items()
        }

        if record.exc_info:
            message_dict["exception"] = self.formatException(record.exc_info)

        return json.dumps(message_dict, default=str)


def set_logger_level(logger: logging.Logger, level: LogLevel) -> logging.Logger:
    """Set the level of a logger from the CLI verbosity name"""
    logger.disabled = level == "none"
    if level == "error":
        logger.setLevel(logging.ERROR)
    elif level == "warning":
        logger.setLevel(logging.WARNING)
    elif level == "debug":
        logger.setLevel(logging.DEBUG)
    elif level == "default":
        logger.setLevel(logging.INFO)
    return logger


def setup(level: LogLevel = "default") -> None:
    """Setup the root logger to write to stderr with the configured formatter. Calling it again
    replaces the previous handler"""
    stream = logging.StreamHandler(sys.stderr)
    if configs.logging.mode == "friendly":
        stream.setFormatter(FriendlyFormatter(configs.logging.format))
    elif configs.logging.mode == "json":
        stream.setFormatter(JsonFormatter(configs.logging.fields))
    else:
        raise ValueError(f"Unknown logging mode: {configs.logging.mode!r}")

    root = logging.getLogger()
    for handler in list(root.handlers):
        if isinstance(handler, logging.StreamHandler) and not _is_pytest_handler(handler):
            root.removeHandler(handler)
    root.addHandler(stream)
    set_logger_level(root, level)


def _is_pytest_handler(handler: logging.Handler) -> bool:
    # pytest's caplog handlers must survive a new setup
    return type(handler).__module__.startswith("_pytest")
