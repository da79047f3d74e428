from __future__ import annotations

import asyncio
import logging
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


async def run_sweep(items: Sequence[T], evaluate: Callable[[T], R], concurrency: int = 4) -> List[R]:
    """Evaluate ``items`` in worker threads, at most ``concurrency`` at a time.

    Results come back in the order of ``items`` regardless of completion order.
    """
    semaphore = asyncio.Semaphore(max(1, concurrency))

    async def run_one(item: T) -> R:
        async with semaphore:
            return await asyncio.to_thread(evaluate, item)

    logger.info("Sweeping %s grid points with concurrency %s", len(items), concurrency)
    return list(await asyncio.gather(*(run_one(item) for item in items)))


def run_sweep_sync(items: Sequence[T], evaluate: Callable[[T], R], concurrency: int = 4) -> List[R]:
    return asyncio.run(run_sweep(items, evaluate, concurrency))
