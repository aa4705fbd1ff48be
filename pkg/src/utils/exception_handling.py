import logging
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Generator

from pydantic import ValidationError

from exceptions import BaseModarithException

# Exit status of a command that couldn't decide or build its result
ERROR_EXIT_CODE = 2


@dataclass
class CaughtException:
    """Outcome of a block run by 'catch_exceptions'"""

    exit_code: int = 0
    exception: BaseException | None = None


def log_validation_error(logger: logging.Logger, error: ValidationError) -> None:
    """Log each error of a pydantic validation error as 'location: message'"""
    logger.error(f"Validation error for {error.title}")
    for item in error.errors():
        location = ".".join([error.title] + [str(part) for part in item["loc"]])
        logger.error(f"  {location}: {item['msg']}")


@contextmanager
def catch_exceptions(
    logger: logging.Logger | None = None,
    error_message: str | None = None,
) -> Generator[CaughtException, None, None]:
    """Execute some code catching and logging any exceptions that might occur. The yielded object
    records the exit status the caught exception maps to"""
    if logger is None:
        logger = logging.getLogger("exception_handler")

    outcome = CaughtException()
    try:
        yield outcome
    except ValidationError as e:
        log_validation_error(logger, e)
        outcome.exit_code = ERROR_EXIT_CODE
        outcome.exception = e
    except BaseModarithException as e:
        logger.error(str(e))
        outcome.exit_code = ERROR_EXIT_CODE
        outcome.exception = e
    except Exception as e:
        logger.error("Got an error", exc_info=True)
        if error_message:
            logger.error(error_message)
        outcome.exit_code = ERROR_EXIT_CODE
        outcome.exception = e
