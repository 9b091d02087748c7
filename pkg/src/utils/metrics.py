"""Run counters for fan computations.

The counters follow the cost accounting of a reverse search: facets are
computed once per vertex, a search edge is shot once per flipped candidate,
and a flip is performed once per ingoing edge.
"""

import json
import time
from dataclasses import dataclass, field, asdict
from typing import Dict, Optional


@dataclass
class RunStats:
    """Counters for a single run."""

    facet_computations: int = 0
    shoot_computations: int = 0
    flips: int = 0
    lp_solves: int = 0
    buchberger_runs: int = 0
    wall_time: float = 0.0
    started_at: float = field(default_factory=time.perf_counter, repr=False)

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        data = asdict(self)
        data.pop("started_at")
        data["wall_time"] = round(self.wall_time, 6)
        return data


class StatsCollector:
    """Collect counters of the sub-algorithms during a run."""

    def __init__(self):
        """Initialize stats collector."""
        self.stats = RunStats()

    def record_facets(self) -> None:
        self.stats.facet_computations += 1

    def record_shoot(self) -> None:
        self.stats.shoot_computations += 1

    def record_flip(self) -> None:
        self.stats.flips += 1

    def record_lp(self) -> None:
        self.stats.lp_solves += 1

    def record_buchberger(self) -> None:
        self.stats.buchberger_runs += 1

    def snapshot(self) -> RunStats:
        """
        Freeze the current counters.

        Returns:
            Copy of the counters with wall time measured up to now
        """
        snap = RunStats(**{k: v for k, v in asdict(self.stats).items() if k != "started_at"})
        snap.wall_time = time.perf_counter() - self.stats.started_at
        return snap

    def export_to_json(self, filepath: str) -> None:
        """
        Export counters to JSON file.

        Args:
            filepath: Path to output file
        """
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(self.snapshot().to_dict(), f, indent=2)

    def reset(self) -> None:
        """Reset all counters and restart the clock."""
        self.stats = RunStats()


# Global stats collector
_stats_collector: Optional[StatsCollector] = None


def get_stats_collector() -> StatsCollector:
    """
    Get global stats collector instance.

    Returns:
        StatsCollector instance
    """
    global _stats_collector
    if _stats_collector is None:
        _stats_collector = StatsCollector()
    return _stats_collector
