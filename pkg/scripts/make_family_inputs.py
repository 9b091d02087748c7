"""Write input documents for the benchmark ideal families."""

import argparse
import sys
from pathlib import Path

# Add parent directory to path
sys.path.append(str(Path(__file__).parent.parent))

from src.fan import families
from src.serialization import InputDocument, serialize
from src.utils.logger import setup_logger, get_logger

logger = get_logger(__name__)


def _symmetry_spec(generators) -> str:
    return ";".join(",".join(str(i + 1) for i in g) for g in generators)


def build_document(family: str, params) -> InputDocument:
    """
    Build the input document of one family member.

    Args:
        family: cyclic, det, symdet or grass2
        params: Integer parameters (cyclic n | det t m n | symdet t n | grass2 n)

    Returns:
        InputDocument carrying the family's symmetry generators
    """
    if family == "cyclic":
        (n,) = params
        ideal, symmetry = families.cyclic(n), families.cyclic_shift(n)
    elif family == "det":
        t, m, n = params
        ideal, symmetry = families.determinantal(t, m, n), families.determinantal_relabeling(m, n)
    elif family == "symdet":
        t, n = params
        ideal, symmetry = families.symmetric_determinantal(t, n), []
    elif family == "grass2":
        (n,) = params
        ideal, symmetry = families.grassmannian_2(n), families.grassmannian_2_relabeling(n, reflection=True)
    else:
        raise ValueError(f"unknown family: {family}")

    return InputDocument(
        ideal=ideal,
        markings=tuple(None for _ in ideal.generators),
        symmetry=_symmetry_spec(symmetry) if symmetry else None,
    )


def main():
    """Main entry point."""
    parser = argparse.ArgumentParser(
        description="Write a grobfan input document for a benchmark ideal family"
    )
    parser.add_argument("family", choices=["cyclic", "det", "symdet", "grass2"])
    parser.add_argument("params", type=int, nargs="+", help="Family parameters")
    parser.add_argument("--out", type=str, help="Output file (default: stdout)")
    parser.add_argument("--log-level", type=str, default="INFO")
    args = parser.parse_args()

    setup_logger(log_level=args.log_level)

    try:
        document = build_document(args.family, args.params)
    except (TypeError, ValueError) as e:
        logger.error(f"Cannot build {args.family} {args.params}: {e}")
        sys.exit(1)

    text = serialize(document) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {len(document.generators)} generators to {args.out}")
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
