# Built-in Imports
import abc
import logging
from concurrent.futures import Future
from typing import Callable, List, Optional

# Third-party Imports
import multiprocess as mp

# Internal Imports
from .. import _logger

logger: logging.Logger = _logger.getLogger("nsr-worker")


class MultiprocessExecutor:
    def __init__(self, pool: Optional[mp.Pool] = None, processes=None):
        if pool is not None:
            self.pool = pool
        else:
            self.pool = mp.Pool(processes)

    def submit(self, fn, *args, **kwargs):
        future = Future()
        result = self.pool.apply_async(
            fn,
            args,
            kwargs,
            callback=future.set_result,
            error_callback=future.set_exception,
        )
        future._result = result  # Store this to prevent it from being garbage-collected
        return future

    def shutdown(self, wait=True):
        self.pool.close()
        if wait:
            self.pool.join()


class CheckSession(abc.ABC):
    """Runs submitted checks and hands results back in submission order."""

    futures: List[Future]

    @abc.abstractmethod
    def add(self, f: Callable, *args, **kwargs) -> Future:
        ...

    def results(self) -> List:
        return [f.result() for f in self.futures]

    def shutdown(self):
        ...


class InlineSession(CheckSession):
    def __init__(self):
        self.futures = []

    def add(self, f: Callable, *args, **kwargs) -> Future:
        future: Future = Future()
        try:
            future.set_result(f(*args, **kwargs))
        except Exception as e:
            future.set_exception(e)
        self.futures.append(future)
        return future


class MPSession(CheckSession):
    def __init__(self, processes: int):
        self.pool = mp.Pool(processes=processes)
        self.executor = MultiprocessExecutor(self.pool)
        self.futures = []
        logger.debug(f"MPSession: pool of {processes} workers")

    def add(self, f: Callable, *args, **kwargs) -> Future:
        future = self.executor.submit(f, *args, **kwargs)
        self.futures.append(future)
        return future

    def shutdown(self):
        self.executor.shutdown()
        logger.debug(f"MPSession: {len(self.futures)} checks done, pool joined")


def open_session(jobs: int) -> CheckSession:
    return MPSession(jobs) if jobs > 1 else InlineSession()
