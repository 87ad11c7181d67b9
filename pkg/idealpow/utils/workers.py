import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from idealpow.constants import Constants
from idealpow.utils.logger import get_logger

logger = get_logger("workers")

T = TypeVar("T")
R = TypeVar("R")


def configured_threads() -> int:
    raw = os.environ.get(Constants.threads_env, "1")
    try:
        threads = int(raw)
    except ValueError:
        logger.log(logging.WARNING, f"ignoring {Constants.threads_env}={raw!r}, not an integer")
        return 1
    return max(threads, 1)


def ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """Map over independent work items; results always come back in input order."""
    items = list(items)
    threads = min(configured_threads(), len(items))
    if threads <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
