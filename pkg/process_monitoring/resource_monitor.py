"""
Resource monitoring for toolkit runs.

Captures the process state when a run starts and reports wall time, CPU
time, resident memory and thread count when it ends. Monitoring never fails a
run: psutil errors are logged and the affected figures fall back to zero.
"""

import logging
import threading
import time
from dataclasses import asdict, dataclass
from typing import Dict

import psutil

# Set up logger for this module
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunStats:
    """Resource usage of one run."""
    wall_seconds: float
    cpu_seconds: float
    rss_mib: float
    threads: int

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)


class ResourceMonitor:
    """Measure resource usage between construction and stop()."""

    def __init__(self):
        self.current_process = None
        self.initial_cpu = 0.0
        self.started_at = time.perf_counter()

        # Capture initial state immediately upon creation
        self.capture_initial_state()

    def capture_initial_state(self):
        """Capture the initial CPU time."""
        try:
            self.current_process = psutil.Process()
            times = self.current_process.cpu_times()
            self.initial_cpu = times.user + times.system
            logger.debug(f"Initial CPU time: {self.initial_cpu:.3f}s")
        except Exception as e:
            logger.warning(f"Error capturing initial state: {e}")
            self.current_process = None

    def stop(self) -> RunStats:
        """Return the statistics accumulated since construction."""
        wall = time.perf_counter() - self.started_at
        cpu, rss = 0.0, 0.0
        threads = threading.active_count()

        if self.current_process is not None:
            try:
                times = self.current_process.cpu_times()
                cpu = times.user + times.system - self.initial_cpu
                rss = self.current_process.memory_info().rss / (1024 * 1024)
                threads = self.current_process.num_threads()
            except Exception as e:
                logger.warning(f"Error reading process statistics: {e}")

        stats = RunStats(round(wall, 6), round(cpu, 6), round(rss, 3), threads)
        logger.debug(f"Run stats: {stats}")
        return stats
