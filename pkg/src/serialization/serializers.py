"""
Text and JSON output for grobfan objects.

Text output is designed to be parsed back: marked bases print as
`{!y^2+x-x^3*y-x^4, !z+y+x}` (marked term first, then the remaining terms
from smallest to largest), plain polynomials print from the largest term
down. JSON output writes every rational as a string "p/q".
"""

import json
from pathlib import Path
from fractions import Fraction
from functools import singledispatch
from typing import Any, Dict, List, Optional, Sequence

import jsonschema

from ..algebra import MarkedBasis, MarkedPolynomial, Polynomial
from ..algebra.monomials import ExponentVector
from ..config import get_config
from ..fan.facets import FacetNormal, cone_of
from ..fan.summary import FanSummary
from ..lp import Cone, extreme_rays
from ..utils.metrics import RunStats
from .parser import InputDocument

FORMATS = ("text", "json")

# Counters that differ between runs of the same input.
TIMING_COUNTERS = ("wall_time",)


def default_names(n: int) -> List[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_json(q: Fraction) -> str:
    """Always `p/q`, integers included."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def format_monomial(exponent: ExponentVector, names: Sequence[str]) -> str:
    factors = []
    for name, k in zip(names, exponent):
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append(f"{name}^{k}")
    return "*".join(factors) or "1"


def _format_term(c: Fraction, exponent: ExponentVector, names: Sequence[str], first: bool) -> str:
    mono = format_monomial(exponent, names)
    size = abs(c)
    if mono == "1":
        body = format_rational(size)
    elif size == 1:
        body = mono
    else:
        body = f"{format_rational(size)}*{mono}"
    if c < 0:
        return "-" + body
    return body if first else "+" + body


def format_polynomial(f: Polynomial, names: Sequence[str]) -> str:
    """Terms from the largest to the smallest in the internal canonical order."""
    if f.is_zero():
        return "0"
    terms = list(reversed(f.terms))
    return "".join(_format_term(t.coefficient, t.exponent, names, i == 0) for i, t in enumerate(terms))


def format_marked(g: MarkedPolynomial, names: Sequence[str]) -> str:
    """`!marked` followed by the other terms in ascending canonical order."""
    head = "!" + format_monomial(g.marked, names)
    return head + "".join(_format_term(t.coefficient, t.exponent, names, False) for t in g.tail())


def format_basis(G: MarkedBasis, names: Sequence[str]) -> str:
    return "{" + ", ".join(format_marked(g, names) for g in G) + "}"


def _polynomial_json(f: Polynomial, names: Sequence[str]) -> Dict[str, Any]:
    return {
        "text": format_polynomial(f, names),
        "terms": [
            {"exponent": list(t.exponent), "coefficient": rational_json(t.coefficient)}
            for t in reversed(f.terms)
        ],
    }


def _marked_json(g: MarkedPolynomial, names: Sequence[str]) -> Dict[str, Any]:
    data = _polynomial_json(g.body, names)
    data["text"] = format_marked(g, names)
    data["marked"] = list(g.marked)
    return data


def _counters_json(counters: Dict[str, Any], timings: bool = True) -> Dict[str, Any]:
    return {
        k: (f"{v:.6f}" if isinstance(v, float) else v)
        for k, v in counters.items()
        if timings or k not in TIMING_COUNTERS
    }


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _check(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"unknown output format '{fmt}', expected one of {FORMATS}")


@singledispatch
def serialize(obj: Any, fmt: str = "text", variables: Optional[Sequence[str]] = None, **options) -> str:
    """
    Render an object as text or JSON.

    Args:
        obj: MarkedBasis, Polynomial, Cone, FacetNormal, FanSummary, RunStats or InputDocument
        fmt: "text" or "json"
        variables: Variable names (x1..xn when omitted)

    Returns:
        Serialized string
    """
    raise TypeError(f"cannot serialize objects of type {type(obj).__name__}")


@serialize.register
def _(obj: Polynomial, fmt: str = "text", variables: Optional[Sequence[str]] = None, **options) -> str:
    _check(fmt)
    names = variables or default_names(obj.n)
    if fmt == "text":
        return format_polynomial(obj, names)
    return _dump(_polynomial_json(obj, names))


@serialize.register
def _(obj: MarkedBasis, fmt: str = "text", variables: Optional[Sequence[str]] = None, **options) -> str:
    _check(fmt)
    names = variables or default_names(obj.n)
    if fmt == "text":
        return format_basis(obj, names)
    return _dump({"variables": list(names), "basis": [_marked_json(g, names) for g in obj]})


@serialize.register
def _(obj: Cone, fmt: str = "text", variables: Optional[Sequence[str]] = None, **options) -> str:
    _check(fmt)
    if fmt == "text":
        lines = [f"cone {obj.n}"]
        lines += ["eq " + " ".join(str(x) for x in e) for e in obj.equations]
        lines += ["ineq " + " ".join(str(x) for x in a) for a in obj.inequalities]
        return "\n".join(lines)
    return _dump({
        "n": obj.n,
        "equations": [list(e) for e in obj.equations],
        "inequalities": [list(a) for a in obj.inequalities],
    })


@serialize.register
def _(obj: FacetNormal, fmt: str = "text", variables: Optional[Sequence[str]] = None, **options) -> str:
    _check(fmt)
    if fmt == "text":
        return " ".join(str(x) for x in obj.alpha) + (" flippable" if obj.flippable else "")
    return _dump({"alpha": list(obj.alpha), "flippable": obj.flippable})


@serialize.register
def _(obj: RunStats, fmt: str = "text", variables: Optional[Sequence[str]] = None, **options) -> str:
    _check(fmt)
    counters = _counters_json(obj.to_dict())
    if fmt == "text":
        return "\n".join(f"{k}: {v}" for k, v in counters.items())
    return _dump(counters)


@serialize.register
def _(obj: InputDocument, fmt: str = "text", variables: Optional[Sequence[str]] = None, **options) -> str:
    _check(fmt)
    names = obj.variable_names
    if fmt == "json":
        return _dump({
            "variables": list(names),
            "generators": [_polynomial_json(f, names) for f in obj.generators],
            "order": obj.order,
            "symmetry": obj.symmetry,
        })
    polys = [
        format_marked(MarkedPolynomial(f, m), names) if m is not None else format_polynomial(f, names)
        for f, m in zip(obj.generators, obj.markings)
    ]
    lines = [f"{obj.field}[{','.join(names)}]{{{', '.join(polys)}}}"]
    if obj.order:
        lines.append(f"@order {obj.order}")
    if obj.symmetry:
        lines.append(f"@symmetry {obj.symmetry}")
    return "\n".join(lines)


def _cone_json(G: MarkedBasis, names: Sequence[str], geometry: bool) -> Dict[str, Any]:
    data: Dict[str, Any] = {"basis": [_marked_json(g, names) for g in G]}
    if geometry:
        C = cone_of(G)
        data["facets"] = [list(a) for a in C.inequalities]
        data["rays"] = [list(r) for r in extreme_rays(C)]
    return data


@serialize.register
def _(obj: FanSummary, fmt: str = "text", variables: Optional[Sequence[str]] = None, **options) -> str:
    _check(fmt)
    names = variables or default_names(obj.n)
    if fmt == "text":
        lines = [f"# n={obj.n} h={obj.h} cones={obj.cone_count}"]
        for i, G in enumerate(obj.maximal_cones):
            line = format_basis(G, names)
            if obj.orbit_sizes is not None:
                line += f"  # orbit size {obj.orbit_sizes[i]}"
            lines.append(line)
        if obj.f_vector is not None:
            lines.append("# f_vector: " + " ".join(str(x) for x in obj.f_vector))
        if obj.min_degree is not None:
            lines.append(f"# degrees: {obj.min_degree} {obj.max_degree}")
        if obj.universal_basis is not None:
            lines.append("# universal_basis: {" + ", ".join(format_polynomial(f, names) for f in obj.universal_basis) + "}")
        for w in obj.warnings:
            lines.append(f"# warning: {w}")
        return "\n".join(lines)

    # timings=True adds wall_time; without it the document depends only on the fan.
    geometry = options.get("geometry", True)
    cones = []
    for i, G in enumerate(obj.maximal_cones):
        entry = _cone_json(G, names, geometry)
        if obj.orbit_sizes is not None:
            entry["orbit_size"] = obj.orbit_sizes[i]
        cones.append(entry)
    data = {
        "variables": list(names),
        "n": obj.n,
        "h": obj.h,
        "cone_count": obj.cone_count,
        "maximal_cones": cones,
        "f_vector": obj.f_vector,
        "universal_basis": (
            [_polynomial_json(f, names) for f in obj.universal_basis]
            if obj.universal_basis is not None else None
        ),
        "min_degree": obj.min_degree,
        "max_degree": obj.max_degree,
        "counters": _counters_json(obj.counters, options.get("timings", False)),
        "warnings": list(obj.warnings),
    }
    return _dump(data)


def _schema_path() -> Path:
    configured = Path(get_config().get("output.schema", "schema/fan.json"))
    if configured.is_absolute() or configured.exists():
        return configured
    return Path(__file__).resolve().parents[2] / configured


def validate_fan_json(text: str, schema_path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Check a serialized FanSummary against the JSON schema.

    Args:
        text: Output of serialize(summary, "json")
        schema_path: Schema file (config output.schema by default)

    Returns:
        The decoded document

    Raises:
        jsonschema.ValidationError: If the document does not match the schema
    """
    path = schema_path or _schema_path()
    schema = json.loads(path.read_text(encoding="utf-8"))
    document = json.loads(text)
    jsonschema.validate(document, schema)
    return document
