import logging
import os
import time
from typing import Optional

from psutil import Process

from .. import _logger
from ..data_protocols import CheckDiagnostics
from ..service import Service
from ..utils import elapsed_ms


class ProfilerService(Service):
    """Wall time, RSS memory and CPU load of the process running one check."""

    def __init__(self, name: str = "profiler", logger: Optional[logging.Logger] = None):
        super().__init__(name=name)
        self.logger = logger or _logger.getLogger("nsr-verify")
        self.process: Optional[Process] = None
        self._start: Optional[float] = None

    def start(self):
        self.process = Process(pid=os.getpid())
        # The first cpu_percent call only primes the counter
        self.process.cpu_percent()
        self._start = time.perf_counter()

    def stop(self, retries: int = 0) -> CheckDiagnostics:
        if not self.process or self._start is None:
            raise RuntimeError(f"{self}: stop() called before start()")

        # Get process-wide information
        memory = self.process.memory_info()
        diag = CheckDiagnostics(
            wall_ms=elapsed_ms(self._start),
            memory_usage=memory.rss / 1024,
            cpu_usage=self.process.cpu_percent(),
            retries=retries,
        )
        self.logger.debug(f"{self}: {diag}")
        self._start = None
        return diag
