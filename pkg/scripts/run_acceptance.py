"""Reproduce the reference fan computations and report pass/fail for each."""

import argparse
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List

# Add parent directory to path
sys.path.append(str(Path(__file__).parent.parent))

from src.fan import (
    PermutationGroup,
    bfs_enumerate,
    f_vector,
    homogeneity_dimension,
    reverse_search,
    symmetric_bfs,
)
from src.fan import families
from src.serialization import parse_input, parse_order
from src.algebra import TermOrderMatrix, buchberger
from src.utils.logger import setup_logger, get_logger
from src.utils.metrics import get_stats_collector

logger = get_logger(__name__)

SAMPLES = Path(__file__).parent.parent / "sample_ideals"


def _load(name: str):
    document = parse_input((SAMPLES / name).read_text(encoding="utf-8"))
    order = parse_order(document.order or "degrevlex:", document.ideal.n, document.variable_names)
    return document, order


def check_gfanbig() -> bool:
    document, order = _load("gfanbig.gf")
    cones = list(reverse_search(document.ideal, order))
    f = f_vector(cones)
    logger.info(f"  cones={len(cones)} f_vector={f}")
    return len(cones) == 7 and f == [1, 8, 14, 7]


def check_sturmfels39() -> bool:
    document, order = _load("sturmfels39.gf")
    count = sum(1 for _ in reverse_search(document.ideal, order))
    logger.info(f"  cones={count}")
    return count == 360


def check_grass25() -> bool:
    ideal = families.grassmannian_2(5)
    cones = list(reverse_search(ideal, TermOrderMatrix.degrevlex(list(range(ideal.n)))))
    h = homogeneity_dimension(cones[0])
    f = f_vector(cones)
    logger.info(f"  h={h} f_vector={f}")
    return h == 5 and f == [1, 20, 120, 300, 330, 132]


def check_det334() -> bool:
    ideal = families.determinantal(3, 3, 4)
    cones = list(reverse_search(ideal, TermOrderMatrix.degrevlex(list(range(ideal.n)))))
    h = homogeneity_dimension(cones[0])
    logger.info(f"  cones={len(cones)} h={h}")
    return len(cones) == 96 and h == 6


def check_grass25_symmetric() -> bool:
    ideal = families.grassmannian_2(5)
    order = TermOrderMatrix.degrevlex(list(range(ideal.n)))
    group = PermutationGroup(families.grassmannian_2_relabeling(5), ideal.n)
    summary = symmetric_bfs(ideal, group, order)
    plain = bfs_enumerate(buchberger(ideal.generators, order))
    logger.info(f"  orbits={len(summary.maximal_cones)} total={summary.cone_count} plain={len(plain)}")
    return summary.cone_count == len(plain) == 132


CHECKS: Dict[str, Callable[[], bool]] = {
    "gfanbig": check_gfanbig,
    "sturmfels39": check_sturmfels39,
    "grass25": check_grass25,
    "det334": check_det334,
    "grass25-symmetric": check_grass25_symmetric,
}

SLOW = ("sturmfels39", "grass25", "det334", "grass25-symmetric")


def main():
    """Main entry point."""
    parser = argparse.ArgumentParser(description="Run the reference fan computations")
    parser.add_argument("--only", nargs="+", choices=list(CHECKS), help="Run only these checks")
    parser.add_argument("--skip-slow", action="store_true", help="Skip the long-running checks")
    parser.add_argument("--log-level", type=str, default="INFO")
    args = parser.parse_args()

    setup_logger(log_level=args.log_level)

    names: List[str] = args.only or list(CHECKS)
    if args.skip_slow:
        names = [name for name in names if name not in SLOW]

    logger.info("=" * 80)
    logger.info(f"Running {len(names)} reference computations")
    logger.info("=" * 80)

    failures = 0
    for name in names:
        get_stats_collector().reset()
        start = time.perf_counter()
        logger.info(f"{name}...")
        ok = CHECKS[name]()
        elapsed = time.perf_counter() - start
        stats = get_stats_collector().snapshot()
        marker = "✓" if ok else "✗"
        logger.info(f"{marker} {name} in {elapsed:.1f}s ({stats.flips} flips, {stats.lp_solves} LPs)")
        failures += not ok

    logger.info("=" * 80)
    logger.info(f"{len(names) - failures} passed, {failures} failed")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
