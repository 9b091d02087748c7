"""Command-line interface for grobfan."""

import argparse
import random
import sys
from pathlib import Path
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple

import jsonschema

from src.algebra import MarkedBasis, TermOrderMatrix, buchberger
from src.config import ALGORITHMS, PRETEST_MODES, get_config
from src.exceptions import GrobfanError, SymmetryError
from src.fan import (
    PermutationGroup,
    cone_of,
    expand_orbits,
    facet_normals,
    flip,
    iter_bfs,
    iter_symmetric_bfs,
    reverse_search,
    summarize,
)
from src.fan.summary import FanSummary
from src.serialization import (
    FORMATS,
    InputDocument,
    format_basis,
    format_polynomial,
    parse_input,
    parse_order,
    parse_symmetry,
    render_slice_svg,
    serialize,
    validate_fan_json,
)
from src.utils.logger import get_logger, setup_logger
from src.utils.metrics import get_stats_collector

logger = get_logger(__name__)

COMMANDS = ("gb", "cone", "facets", "flip", "enumerate", "fvector", "universal", "render", "stats")


def emit(text: str) -> None:
    """Write a result line to stdout immediately."""
    sys.stdout.write(text + "\n")
    sys.stdout.flush()


def load_document(path: Optional[str]) -> InputDocument:
    text = Path(path).read_text(encoding="utf-8") if path else sys.stdin.read()
    return parse_input(text)


def resolve_order(doc: InputDocument, args: argparse.Namespace) -> TermOrderMatrix:
    spec = args.order or doc.order or get_config().get("algebra.default_order", "degrevlex:")
    return parse_order(spec, doc.ideal.n, doc.variable_names)


def resolve_group(doc: InputDocument, args: argparse.Namespace) -> PermutationGroup:
    spec = args.symmetry or doc.symmetry
    if not spec:
        raise SymmetryError("symmetric traversal needs --symmetry or an @symmetry line")
    return PermutationGroup(parse_symmetry(spec, doc.ideal.n), doc.ideal.n)


def resolve_basis(doc: InputDocument, args: argparse.Namespace) -> MarkedBasis:
    """A marked input document is taken as is; otherwise compute the basis for the order."""
    if doc.is_marked:
        return doc.marked_basis()
    return buchberger(doc.generators, resolve_order(doc, args))


def traverse(doc: InputDocument, args: argparse.Namespace) -> Iterator[Tuple[MarkedBasis, Optional[int]]]:
    """Run the selected traversal; yields (basis, orbit size or None)."""
    algorithm = args.algorithm or get_config().fan.default_algorithm
    order = resolve_order(doc, args)
    logger.info(f"Enumerating with {algorithm}")
    if algorithm == "reverse-search":
        for G in reverse_search(doc.ideal, order):
            yield G, None
    elif algorithm == "bfs":
        for G in iter_bfs(buchberger(doc.generators, order)):
            yield G, None
    else:
        yield from iter_symmetric_bfs(doc.ideal, resolve_group(doc, args), order)


def collect_fan(
    doc: InputDocument,
    args: argparse.Namespace,
    with_f_vector: bool = False,
    with_universal: bool = False,
) -> FanSummary:
    found = list(traverse(doc, args))
    bases = [G for G, _ in found]
    sizes = [s for _, s in found]
    if sizes and sizes[0] is not None:
        everything = expand_orbits(bases, resolve_group(doc, args))
        return summarize(
            bases, orbit_sizes=sizes, all_cones=everything,
            with_f_vector=with_f_vector, with_universal=with_universal,
            counters=get_stats_collector().snapshot().to_dict(),
        )
    return summarize(
        bases, with_f_vector=with_f_vector, with_universal=with_universal,
        counters=get_stats_collector().snapshot().to_dict(),
    )


def emit_summary(summary: FanSummary, doc: InputDocument, args: argparse.Namespace, **options) -> None:
    text = serialize(summary, "json", doc.variable_names, timings=args.timings, **options)
    if args.check_schema:
        try:
            validate_fan_json(text)
        except jsonschema.ValidationError as e:
            raise ValueError(f"JSON output does not match the schema: {e.message}")
    emit(text)


# -- commands -------------------------------------------------------------

def cmd_gb(doc: InputDocument, args: argparse.Namespace) -> int:
    G = buchberger(doc.generators, resolve_order(doc, args))
    emit(serialize(G, args.output, doc.variable_names))
    return 0


def cmd_cone(doc: InputDocument, args: argparse.Namespace) -> int:
    emit(serialize(cone_of(resolve_basis(doc, args)), args.output))
    return 0


def cmd_facets(doc: InputDocument, args: argparse.Namespace) -> int:
    facets = facet_normals(resolve_basis(doc, args), only_flippable=args.flippable_only, pretest=args.pretest)
    for facet in facets:
        emit(serialize(facet, args.output))
    return 0


def cmd_flip(doc: InputDocument, args: argparse.Namespace) -> int:
    G = resolve_basis(doc, args)
    facets = facet_normals(G, only_flippable=True, pretest=args.pretest)
    if not 0 <= args.facet < len(facets):
        raise ValueError(f"facet index {args.facet} out of range; the cone has {len(facets)} flippable facets")
    emit(serialize(flip(G, facets[args.facet].alpha, check_flippable=False), args.output, doc.variable_names))
    return 0


def cmd_enumerate(doc: InputDocument, args: argparse.Namespace) -> int:
    if args.output == "json":
        emit_summary(collect_fan(doc, args), doc, args)
        return 0
    count = 0
    for G, size in traverse(doc, args):
        line = format_basis(G, doc.variable_names)
        count += size if size is not None else 1
        emit(line if size is None else f"{line}  # orbit size {size}")
    emit(f"# cones={count}")
    return 0


def cmd_fvector(doc: InputDocument, args: argparse.Namespace) -> int:
    summary = collect_fan(doc, args, with_f_vector=True)
    if args.output == "json":
        emit_summary(summary, doc, args, geometry=False)
    else:
        emit(" ".join(str(x) for x in summary.f_vector))
    return 0


def cmd_universal(doc: InputDocument, args: argparse.Namespace) -> int:
    summary = collect_fan(doc, args, with_universal=True)
    if args.output == "json":
        emit_summary(summary, doc, args, geometry=False)
    else:
        for f in summary.universal_basis:
            emit(format_polynomial(f, doc.variable_names))
    return 0


def cmd_render(doc: InputDocument, args: argparse.Namespace) -> int:
    summary = collect_fan(doc, args)
    if summary.orbit_sizes is not None:
        group = resolve_group(doc, args)
        summary = summarize(expand_orbits(summary.maximal_cones, group))
    svg = render_slice_svg(summary, doc.variable_names)
    if args.svg_out:
        Path(args.svg_out).write_text(svg, encoding="utf-8")
        logger.info(f"SVG written to {args.svg_out}")
    else:
        sys.stdout.write(svg)
        sys.stdout.flush()
    return 0


def cmd_stats(doc: InputDocument, args: argparse.Namespace) -> int:
    for _ in traverse(doc, args):
        pass
    emit(serialize(get_stats_collector().snapshot(), args.output))
    return 0


HANDLERS: Dict[str, Callable[[InputDocument, argparse.Namespace], int]] = {
    "gb": cmd_gb,
    "cone": cmd_cone,
    "facets": cmd_facets,
    "flip": cmd_flip,
    "enumerate": cmd_enumerate,
    "fvector": cmd_fvector,
    "universal": cmd_universal,
    "render": cmd_render,
    "stats": cmd_stats,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grobfan",
        description="Gröbner fans of polynomial ideals over Q.",
    )
    parser.add_argument("command", choices=COMMANDS, help="What to compute")
    parser.add_argument("input", nargs="?", help="Input document (default: stdin)")
    parser.add_argument("--order", help="Term order, e.g. lex:z,y,x or weight:1,2,3;tiebreak=degrevlex:")
    parser.add_argument("--symmetry", help="Symmetry generators as ;-separated 1-based image lists")
    parser.add_argument("--algorithm", choices=ALGORITHMS, help="Traversal (default from config)")
    parser.add_argument("--output", choices=FORMATS, default=None, help="Output format")
    parser.add_argument("--flippable-only", action="store_true", help="Only list flippable facets")
    parser.add_argument("--pretest", choices=PRETEST_MODES, help="Algebraic facet pretest")
    parser.add_argument("--facet", type=int, default=0, help="Index into the sorted flippable facets (flip)")
    parser.add_argument("--svg-out", help="Write the SVG drawing to this file (render); the window is the standard simplex unless render.extent is set")
    parser.add_argument("--check-schema", action="store_true", help="Validate JSON fan output against schema/fan.json")
    parser.add_argument("--timings", action="store_true", help="Include wall_time in JSON fan output")
    parser.add_argument("--seed", type=int, help="Random seed; the core algorithms are deterministic")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--log-file", help="Also log to this file")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one grobfan command.

    Returns:
        Exit status: 0 on success, 1 parse error, 2 invalid term order,
        3 invalid symmetry, 4 internal guard
    """
    args = build_parser().parse_args(argv)
    config = get_config()
    setup_logger(
        log_level=(args.log_level or config.app.log_level).upper(),
        log_file=args.log_file or config.app.log_file,
        rotation=config.get("logging.rotation", "10 MB"),
        retention=config.get("logging.retention", "7 days"),
        format_json=config.app.log_json,
    )
    args.output = args.output or config.get("output.default_format", "text")
    if args.seed is not None:
        random.seed(args.seed)

    get_stats_collector().reset()
    try:
        doc = load_document(args.input)
        return HANDLERS[args.command](doc, args)
    except GrobfanError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"grobfan: {e}", file=sys.stderr)
        return e.exit_code
    except (ValueError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"grobfan: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
