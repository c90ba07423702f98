"""Tests for the order-preserving grid evaluation pool."""

import random
import time

import pytest

from app.config import reload_config
from processing.jobs import GridEvaluationPool, make_pool


def slow_square(value):
    time.sleep(random.uniform(0.0, 0.005))
    return value * value


@pytest.mark.parametrize("workers", [1, 2, 8])
def test_order_preserved(workers):
    pool = GridEvaluationPool(max_workers=workers, show_progress=False)
    assert pool.map_ordered(slow_square, range(40)) == [v * v for v in range(40)]


def test_exception_propagates():
    def fail_on_seven(value):
        if value == 7:
            raise ValueError("seven")
        return value

    pool = GridEvaluationPool(max_workers=4, show_progress=False)
    with pytest.raises(ValueError, match="seven"):
        pool.map_ordered(fail_on_seven, range(12))


def test_stats():
    pool = make_pool(3)
    pool.map_ordered(lambda v: v, [1, 2, 3, 4], desc="stats")
    stats = pool.stats.to_dict()
    assert stats["total"] == 4
    assert stats["completed"] == 4
    assert stats["elapsed"] >= 0.0


def test_empty_input():
    assert make_pool(2).map_ordered(lambda v: v, []) == []


def test_default_workers_from_config(monkeypatch):
    monkeypatch.setenv("BS_THREADS", "3")
    reload_config()
    assert make_pool().max_workers == 3
