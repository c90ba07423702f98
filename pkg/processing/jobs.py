"""Order-preserving worker pool for grid evaluations."""
from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from tqdm import tqdm

from app.config import get_config
from app.logger import get_logger

logger = get_logger(__name__)


@dataclass
class PoolStats:
    """Progress of the most recent map."""

    total: int = 0
    completed: int = 0
    started_at: float = field(default_factory=time.time)
    finished_at: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "total": self.total,
            "completed": self.completed,
            "elapsed": (self.finished_at or time.time()) - self.started_at,
        }


class GridEvaluationPool:
    """Evaluates a function over grid items in threads, returning results in input order."""

    def __init__(self, max_workers: Optional[int] = None, show_progress: Optional[bool] = None) -> None:
        config = get_config()
        self.max_workers = max(1, int(max_workers or config.THREADS))
        self.show_progress = config.SHOW_PROGRESS if show_progress is None else show_progress
        self.stats = PoolStats()
        self._lock = threading.Lock()

    def _advance(self, bar: Optional[tqdm]) -> None:
        with self._lock:
            self.stats.completed += 1
            if bar is not None:
                bar.update(1)

    def map_ordered(self, fn: Callable[[Any], Any], items: Sequence[Any], desc: str = "evaluating") -> List[Any]:
        """
        Apply fn to every item.

        Results are placed by index, so the output order never depends on
        completion order. The first exception raised by fn propagates.
        """
        items = list(items)
        self.stats = PoolStats(total=len(items))
        results: List[Any] = [None] * len(items)
        bar = tqdm(total=len(items), desc=desc, leave=False) if self.show_progress and items else None
        try:
            if self.max_workers == 1 or len(items) <= 1:
                for index, item in enumerate(items):
                    results[index] = fn(item)
                    self._advance(bar)
                return results
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                futures = {executor.submit(fn, item): index for index, item in enumerate(items)}
                for future in as_completed(futures):
                    results[futures[future]] = future.result()
                    self._advance(bar)
            return results
        finally:
            self.stats.finished_at = time.time()
            if bar is not None:
                bar.close()
            logger.debug(f"Pool '{desc}': {self.stats.completed}/{self.stats.total} items on {self.max_workers} workers")


def make_pool(threads: Optional[int] = None) -> GridEvaluationPool:
    return GridEvaluationPool(max_workers=threads)


__all__ = ["GridEvaluationPool", "PoolStats", "make_pool"]
