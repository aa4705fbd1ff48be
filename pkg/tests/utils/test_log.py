import json
import logging
import re
import sys
from dataclasses import dataclass

import pytest

import utils.log as log
from configs import FriendlyLogConfig, JsonLogConfig, configs

LEVEL_MESSAGES = [
    (logging.DEBUG, "stage 3 decided"),
    (logging.INFO, "trace moved to 2"),
    (logging.WARNING, "search limit close"),
    (logging.ERROR, "oracle dropped a formula"),
]


@pytest.fixture
def json_logging(monkeypatch):
    monkeypatch.setattr(logging.root, "handlers", [])
    monkeypatch.setattr(configs, "logging", JsonLogConfig(mode="json", fields=None))


def _log_all(logger: logging.Logger) -> None:
    for level, message in LEVEL_MESSAGES:
        logger.log(level, message)


@pytest.mark.parametrize(
    "level, expected",
    [
        ("none", []),
        ("error", ["oracle dropped a formula"]),
        ("warning", ["search limit close", "oracle dropped a formula"]),
        ("default", ["trace moved to 2", "search limit close", "oracle dropped a formula"]),
        ("debug", [message for _, message in LEVEL_MESSAGES]),
    ],
)
def test_set_logger_level(capsys, json_logging, level, expected):
    """'set_logger_level' should only let through the messages at or above the level of the
    verbosity name, and nothing for 'none'"""
    log.setup("debug")
    logger = logging.getLogger(f"modarith.test.{level}")
    log.set_logger_level(logger, level)

    _log_all(logger)

    lines = capsys.readouterr().err.splitlines()
    assert [json.loads(line)["message"] for line in lines] == expected


@pytest.mark.parametrize(
    "level, color",
    [
        (logging.INFO, log.FriendlyFormatter.GREY),
        (logging.WARNING, log.FriendlyFormatter.YELLOW),
        (logging.ERROR, log.FriendlyFormatter.RED),
        (logging.CRITICAL, log.FriendlyFormatter.BOLD_RED),
    ],
)
def test_friendly_formatter(level, color):
    """'FriendlyFormatter' should wrap the formatted record in the color of its level"""
    formatter = log.FriendlyFormatter("%(levelname)s %(message)s")
    record = logging.LogRecord("modarith", level, __file__, 1, "world %d", (2,), None)

    text = formatter.format(record)

    assert text.startswith(color)
    assert text.endswith(log.FriendlyFormatter.RESET_COLOR)
    assert f"{logging.getLevelName(level)} world 2" in text


def test_friendly_formatter_default_format(capsys, monkeypatch):
    """'setup' should use the default friendly format when no format is configured"""
    monkeypatch.setattr(logging.root, "handlers", [])
    monkeypatch.setattr(configs, "logging", FriendlyLogConfig(mode="friendly", format=None))
    log.setup()

    logging.getLogger("modarith.test").info("Built θ family for d=2")

    pattern = r"\d{4}-\d{2}-\d{2} \d{2}:\d{2}:\d{2},\d+ \[INFO\]: Built θ family for d=2"
    assert re.search(pattern, capsys.readouterr().err) is not None


def test_json_formatter_fields():
    """'JsonFormatter' should map each configured key to the record attribute it names"""
    formatter = log.JsonFormatter({"msg": "message", "level": "levelname", "logger": "name"})
    record = logging.LogRecord("solovaysim", logging.WARNING, __file__, 1, "stage %s", (4,), None)

    assert json.loads(formatter.format(record)) == {
        "msg": "stage 4",
        "level": "WARNING",
        "logger": "solovaysim",
    }


def test_json_formatter_exception():
    """'JsonFormatter' should add the traceback of the exception under 'exception'"""
    formatter = log.JsonFormatter()
    try:
        raise KeyError("missing world")
    except KeyError:
        record = logging.LogRecord(
            "modarith", logging.ERROR, __file__, 1, "failed", None, sys.exc_info()
        )

    data = json.loads(formatter.format(record))

    assert data["message"] == "failed"
    assert "KeyError: 'missing world'" in data["exception"]


def test_setup_unknown_mode(monkeypatch):
    """'setup' should raise a 'ValueError' for a logging mode it doesn't know"""

    @dataclass
    class UnknownLogConfig:
        mode: str

    monkeypatch.setattr(logging.root, "handlers", [])
    monkeypatch.setattr(configs, "logging", UnknownLogConfig(mode="xml"))

    with pytest.raises(ValueError, match="Unknown logging mode: 'xml'"):
        log.setup()


@pytest.mark.parametrize(
    "level, expected",
    [
        ("error", logging.ERROR),
        ("warning", logging.WARNING),
        ("default", logging.INFO),
        ("debug", logging.DEBUG),
    ],
)
def test_setup_level(monkeypatch, json_logging, level, expected):
    """'setup' should set the level of the root logger from the verbosity name"""
    monkeypatch.setattr(logging.root, "level", logging.WARNING)

    log.setup(level)

    assert logging.root.level == expected


def test_setup_replaces_handler(caplog, json_logging):
    """'setup' should replace the stream handler of a previous setup and keep the handlers of
    pytest"""
    logging.root.addHandler(caplog.handler)

    log.setup()
    log.setup()

    stream_handlers = [
        handler
        for handler in logging.root.handlers
        if isinstance(handler, logging.StreamHandler) and handler is not caplog.handler
    ]
    assert len(stream_handlers) == 1
    assert caplog.handler in logging.root.handlers
