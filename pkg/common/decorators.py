"""
Common decorators for engine entry points
"""

import asyncio
import functools
import logging
import threading
from datetime import datetime
from typing import Any, Callable, Dict, Hashable

logger = logging.getLogger(__name__)


def log_function_call(func: Callable) -> Callable:
    """Decorator to log function calls with timing (sync or async)"""
    if asyncio.iscoroutinefunction(func):
        @functools.wraps(func)
        async def async_wrapper(*args, **kwargs):
            start_time = datetime.now()
            logger.debug(f"Calling {func.__name__}")
            try:
                result = await func(*args, **kwargs)
            except Exception as e:
                elapsed = (datetime.now() - start_time).total_seconds()
                logger.error(f"Error in {func.__name__} after {elapsed:.3f}s: {e}")
                raise
            elapsed = (datetime.now() - start_time).total_seconds()
            logger.debug(f"Finished {func.__name__} in {elapsed:.3f}s")
            return result
        return async_wrapper

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = datetime.now()
        logger.debug(f"Calling {func.__name__}")
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            elapsed = (datetime.now() - start_time).total_seconds()
            logger.error(f"Error in {func.__name__} after {elapsed:.3f}s: {e}")
            raise
        elapsed = (datetime.now() - start_time).total_seconds()
        logger.debug(f"Finished {func.__name__} in {elapsed:.3f}s")
        return result
    return wrapper


def timed(metric_name: str) -> Callable:
    """Decorator to record call durations in the shared metrics collector"""
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            from common.metrics import metrics

            start_time = datetime.now()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = (datetime.now() - start_time).total_seconds()
                metrics.record_call(metric_name, elapsed)
        return wrapper
    return decorator


def cache_result(name: str = None) -> Callable:
    """
    Decorator to cache results of a pure function on hashable arguments.

    The cache is an insert-if-absent map guarded by a lock; concurrent
    callers computing the same key keep whichever value was stored first.
    """
    def decorator(func: Callable) -> Callable:
        cache: Dict[Hashable, Any] = {}
        lock = threading.Lock()
        metric = name or func.__name__

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            from common.metrics import metrics

            key = (args, tuple(sorted(kwargs.items())))
            with lock:
                if key in cache:
                    metrics.record_cache(metric, hit=True)
                    return cache[key]
            result = func(*args, **kwargs)
            with lock:
                metrics.record_cache(metric, hit=False)
                return cache.setdefault(key, result)

        def cache_clear():
            with lock:
                cache.clear()

        wrapper.cache_clear = cache_clear
        wrapper.cache_size = lambda: len(cache)
        return wrapper
    return decorator
