"""
Engine metrics: call timings, cache hit rates and skein expansion counts
"""

import threading
from collections import defaultdict
from datetime import datetime
from typing import Any, Dict


class MetricsCollector:
    """Collect engine metrics"""

    def __init__(self):
        self._lock = threading.Lock()
        self.reset()

    def reset(self):
        with self._lock:
            self.stats = {
                "calls": defaultdict(lambda: {"calls": 0, "total_time": 0.0}),
                "caches": defaultdict(lambda: {"hits": 0, "misses": 0}),
                "counters": defaultdict(int),
                "start_time": datetime.now(),
            }

    def record_call(self, name: str, duration: float):
        """Record a timed call"""
        with self._lock:
            self.stats["calls"][name]["calls"] += 1
            self.stats["calls"][name]["total_time"] += duration

    def record_cache(self, name: str, hit: bool):
        """Record a cache lookup"""
        with self._lock:
            self.stats["caches"][name]["hits" if hit else "misses"] += 1

    def increment(self, name: str, amount: int = 1):
        """Bump a named counter"""
        with self._lock:
            self.stats["counters"][name] += amount

    def get_stats(self) -> Dict[str, Any]:
        """Get current statistics"""
        with self._lock:
            uptime = datetime.now() - self.stats["start_time"]
            calls = {k: dict(v) for k, v in self.stats["calls"].items()}
            for entry in calls.values():
                entry["avg_time"] = entry["total_time"] / entry["calls"] if entry["calls"] else 0.0
            return {
                "uptime": str(uptime).split(".")[0],
                "calls": calls,
                "caches": {k: dict(v) for k, v in self.stats["caches"].items()},
                "counters": dict(self.stats["counters"]),
            }


metrics = MetricsCollector()
