import contextlib
import logging
import time

from leaguerank.internal import log

logger = logging.getLogger(__name__)


@contextlib.contextmanager
def time_logger(name, level=log.TRACE_LOG_LEVEL):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    logger.log(level, "%s took %dms", name, elapsed * 1000)
