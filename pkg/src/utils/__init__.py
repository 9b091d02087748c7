"""Utility package initialization."""

from .logger import setup_logger, get_logger
from .metrics import RunStats, StatsCollector, get_stats_collector

__all__ = [
    "setup_logger",
    "get_logger",
    "RunStats",
    "StatsCollector",
    "get_stats_collector"
]
