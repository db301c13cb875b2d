"""
Ordered thread-pool map for independent solves
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from hyperspec.core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """Apply fn to every item; results keep the input order whatever the schedule."""
    items = list(items)
    workers = settings.VERIFY_WORKERS if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    logger.debug(f"mapping {len(items)} items over {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
