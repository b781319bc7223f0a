"""Replica-level worker pool with order-preserving results."""

from collections.abc import Callable, Iterable
from multiprocessing import Pool
from typing import TypeVar

from env import settings

from .logger import Logger

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: int | None) -> int:
    """Explicit value wins, then PAM_WORKERS."""
    if workers is None:
        return settings.PAM_WORKERS
    return max(1, int(workers))


def map_ordered(
    func: Callable[[T], R],
    items: Iterable[T],
    workers: int | None = None,
) -> list[R]:
    """Apply ``func`` to every item, in parallel when more than one worker is set.

    Results come back in input order, so reductions over them do not depend
    on scheduling. ``func`` must be a module-level callable.
    """
    work = list(items)
    n_workers = resolve_workers(workers)
    if n_workers > 1 and len(work) > 1:
        Logger.debug("map_ordered | pool | workers=%s items=%s", n_workers, len(work))
        with Pool(processes=min(n_workers, len(work))) as pool:
            return pool.map(func, work)
    return [func(item) for item in work]
