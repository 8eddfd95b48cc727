"""Memoisation of per-discriminant enumerations."""

import threading

from cachetools import LRUCache

from prymcusps.config import get_settings

enumeration_cache = LRUCache(maxsize=get_settings().enumeration_cache_size)
algebraic_cache = LRUCache(maxsize=get_settings().enumeration_cache_size)
cache_lock = threading.Lock()


def clear_caches() -> None:
    """Drop every memoised enumeration."""
    with cache_lock:
        enumeration_cache.clear()
        algebraic_cache.clear()


def get_all_cache_stats() -> dict:
    """Get statistics for all caches."""
    return {
        "enumeration_cache": {"size": len(enumeration_cache), "maxsize": enumeration_cache.maxsize},
        "algebraic_cache": {"size": len(algebraic_cache), "maxsize": algebraic_cache.maxsize},
    }
