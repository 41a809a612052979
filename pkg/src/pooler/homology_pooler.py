"""
Homology Pooler - Parallel Columns

Runs independent homology jobs (one per algebra column) concurrently:
asyncio.gather over run_in_executor on a process pool when workers > 1,
inline otherwise. Results come back keyed, in submission order, so
reports never depend on scheduling.
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Mapping, Optional, Tuple

from config import WORKERS

logger = logging.getLogger(__name__)

Job = Tuple[Callable, tuple]


class HomologyPooler:
    """Fan out pure, picklable jobs and gather their results."""

    def __init__(self, workers: Optional[int] = None):
        """
        Initialize the pooler.

        Args:
            workers: Process count; 1 runs every job in the calling process
        """
        self.workers = max(1, workers if workers is not None else WORKERS)
        logger.info(f"HomologyPooler initialized with {self.workers} worker(s)")

    async def run(self, jobs: Mapping[str, Job]) -> Dict[str, object]:
        """
        Run all jobs and return {key: result} in the order of jobs.

        The first job exception propagates after the pool shuts down.
        """
        keys = list(jobs)
        if self.workers == 1 or len(keys) <= 1:
            results = {}
            for key in keys:
                fn, args = jobs[key]
                logger.debug(f"Running job {key} inline")
                results[key] = fn(*args)
            return results

        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=min(self.workers, len(keys))) as executor:
            futures = [loop.run_in_executor(executor, fn, *args) for fn, args in (jobs[k] for k in keys)]
            logger.info(f"Dispatched {len(futures)} jobs to {min(self.workers, len(keys))} processes")
            values = await asyncio.gather(*futures)
        return dict(zip(keys, values))

    def run_sync(self, jobs: Mapping[str, Job]) -> Dict[str, object]:
        """Blocking entry point; usable as a harness runner."""
        return asyncio.run(self.run(jobs))
