"""Evaluate independent grid points, optionally across processes.

Each (function, item) pair is shipped as a cloudpickle payload, so
closures and lambdas cross the process boundary; results come back in
submission order.
"""
import logging
import os
import pickle

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

import cloudpickle

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

WORKERS_ENV = "POLYLB_WORKERS"


def default_workers() -> int:
    """Worker count from POLYLB_WORKERS, else 1."""
    raw = os.environ.get(WORKERS_ENV, "")
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer", WORKERS_ENV, raw)
        return 1
    return max(1, value)


def _run_payload(payload: bytes) -> bytes:
    fn, item = pickle.loads(payload)
    return cloudpickle.dumps(fn(item))


def run_tasks(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    todo = list(items)
    if workers <= 1 or len(todo) <= 1:
        return [fn(item) for item in todo]
    logger.info("running %d tasks on %d workers", len(todo), workers)
    payloads = [cloudpickle.dumps((fn, item)) for item in todo]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_payload, payloads))
    return [pickle.loads(r) for r in results]
