"""
Per-run cache of derived series
"""
import logging
import threading
from typing import Dict, Optional, Tuple

from cachetools import LRUCache

from predictkit.ingest import derive_series
from predictkit.models import AssetClass, ColumnConfig, DerivedSeries, ObservationPanel

logger = logging.getLogger(__name__)

CacheKey = Tuple[int, str, str]


class SeriesCache:
    """LRU cache of DerivedSeries keyed by panel, country and asset"""

    def __init__(self, cache_size: int = 512):
        self.cache: LRUCache = LRUCache(maxsize=cache_size)
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def _key(self, panel: ObservationPanel, country: str, asset: AssetClass) -> CacheKey:
        return (id(panel), country, asset.value)

    def get_series(
        self,
        panel: ObservationPanel,
        columns: ColumnConfig,
        country: str,
        asset: AssetClass,
    ) -> DerivedSeries:
        """Get a derived series, deriving it on a miss"""
        key = self._key(panel, country, asset)
        with self._lock:
            cached = self.cache.get(key)
            if cached is not None:
                self.hits += 1
                logger.debug(f"Cache hit for series: {country}/{asset.value}")
                return cached
            self.misses += 1

        series = derive_series(panel, columns, country, asset)
        with self._lock:
            self.cache[key] = series
        logger.debug(f"Derived series: {country}/{asset.value}")
        return series

    def clear(self):
        """Drop every cached series and reset the counters"""
        with self._lock:
            self.cache.clear()
            self.hits = 0
            self.misses = 0
        logger.debug("Series cache cleared")

    def stats(self) -> Dict[str, int]:
        """Get cache statistics"""
        return {
            "cache_size": len(self.cache),
            "max_size": int(self.cache.maxsize),
            "hits": self.hits,
            "misses": self.misses,
        }


# Global cache instance
_series_cache: Optional[SeriesCache] = None


def get_series_cache() -> SeriesCache:
    """Get the global series cache instance"""
    global _series_cache
    if _series_cache is None:
        _series_cache = SeriesCache()
    return _series_cache
