"""Deterministic chunked fan-out for the scan loops.

Chunks are contiguous slices handed to worker threads and the results are
returned in slice order, so aggregate output never depends on the thread
count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

_T = TypeVar("_T")
_R = TypeVar("_R")

_MIN_CHUNK = 64


def run_chunks(worker: Callable[[Sequence[_T]], _R], items: Sequence[_T], threads: int) -> list[_R]:
    if threads < 1:
        raise ValueError("threads must be at least 1")
    if threads == 1 or len(items) <= _MIN_CHUNK:
        return [worker(items)]
    size = max(_MIN_CHUNK, -(-len(items) // threads))
    chunks = [items[k : k + size] for k in range(0, len(items), size)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, chunks))
