import functools
import logging
import time
from typing import Any, Callable, TypeVar, cast

logger = logging.getLogger("qgame_labs")

F = TypeVar("F", bound=Callable[..., Any])


def log(func: F) -> F:
    """
    Logs entry, exit and elapsed time of a public entry point at DEBUG level.

    Failures are logged with the exception type and re-raised unchanged.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        name = func.__qualname__
        logger.debug("%s started", name)
        start = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.debug("%s failed with %s: %s", name, type(e).__name__, e)
            raise
        logger.debug("%s finished in %.3f s", name, time.perf_counter() - start)
        return result

    return cast(F, wrapper)


def configure_logging(verbose: bool = False):
    """
    Sends package log records to stderr. Only the command line calls this.
    """

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="[%(levelname)s][%(name)s][%(asctime)s] %(message)s",
    )
