import logging
from typing import Optional

from hyperspec.core.config import settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(verbose: bool = False, level: Optional[str] = None) -> None:
    """Configure the root logger once for CLI runs; library code only calls getLogger."""
    if verbose:
        resolved = logging.DEBUG
    else:
        resolved = getattr(logging, (level or settings.LOG_LEVEL).upper(), logging.WARNING)
    logging.basicConfig(level=resolved, format=LOG_FORMAT, datefmt="%H:%M:%S", force=True)
