"""Test input parsing, text and JSON output, and SVG rendering."""

import json
import re
from fractions import Fraction

import jsonschema
import pytest

from src.algebra import Polynomial, TermOrderMatrix, unit_basis
from src.exceptions import InputSyntaxError, SymmetryError, TermOrderError
from src.fan import FacetNormal, cone_of, reverse_search, summarize
from src.lp import Cone
from src.serialization import (
    format_basis,
    format_polynomial,
    parse_basis,
    parse_cone,
    parse_input,
    parse_order,
    parse_polynomial,
    parse_symmetry,
    render_slice_svg,
    serialize,
    validate_fan_json,
)
from src.utils.metrics import get_stats_collector


class TestParseInput:
    """Test parsing of input documents."""

    def test_gfanbig_document(self, gfanbig_doc):
        """Test the ring, generators and directives."""
        assert gfanbig_doc.variable_names == ("x", "y", "z")
        assert gfanbig_doc.order == "lex:z,y,x"
        assert gfanbig_doc.symmetry is None
        assert gfanbig_doc.generators[1] == parse_polynomial("x^3*z+x+y^2", ("x", "y", "z"))
        assert not gfanbig_doc.is_marked

    def test_comments_and_whitespace(self):
        """Test that layout and comments are ignored."""
        doc = parse_input("# ring\nQ[ a , b ]\n{\n  a^2 - 1/2*b,  # first\n  3 b\n}\n")

        assert doc.generators[0].coefficient((0, 1)) == Fraction(-1, 2)
        assert doc.generators[1] == Polynomial({(0, 1): 3}, 2)

    def test_marked_document(self, sample_path):
        """Test a document whose generators carry marks."""
        doc = parse_input(sample_path("gfanbig_marked.gf").read_text(encoding="utf-8"))

        assert doc.is_marked
        assert doc.marked_basis().marked_exponents == [(0, 2, 0), (0, 0, 1)]

    def test_symmetry_directive(self, sample_path):
        """Test the @symmetry line."""
        doc = parse_input(sample_path("cyclic5.gf").read_text(encoding="utf-8"))

        assert doc.symmetry == "2,3,4,5,1"
        assert len(doc.generators) == 5

    def test_unknown_identifier_position(self):
        """Test line and column of an unknown variable."""
        with pytest.raises(InputSyntaxError) as exc_info:
            parse_input("Q[x,y]\n{x+w}")

        assert exc_info.value.line == 2
        assert exc_info.value.column == 4
        assert "unknown identifier 'w'" in str(exc_info.value)

    @pytest.mark.parametrize(
        "text, message",
        [
            ("Z[x]{x}", "unsupported coefficient field"),
            ("Q[x,x]{x}", "declared twice"),
            ("Q[x]{}", "empty generator list"),
            ("Q[x]{0, x-x}", "all generators are zero"),
            ("Q[x]{x+}", "expected an identifier"),
            ("Q[x,y]{x y}", "expected ','"),
            ("Q[x]{!x+!x^2}", "more than one marked term"),
            ("Q[x]{!x-x+1}", "the marked term cancels"),
            ("Q[x]{x/0}", "expected"),
            ("Q[x]{1/0*x}", "zero denominator"),
            ("Q[x]{x}\n@colour red", "unknown directive"),
            ("Q[x]{x}\n@order lex:\n@order lex:", "duplicate directive"),
        ],
    )
    def test_syntax_errors(self, text, message):
        """Test rejection of malformed documents."""
        with pytest.raises(InputSyntaxError, match=message):
            parse_input(text)

    def test_marked_basis_requires_marks(self, gfanbig_doc):
        """Test that unmarked generators are not a marked basis."""
        with pytest.raises(InputSyntaxError):
            gfanbig_doc.marked_basis()


class TestParseOrder:
    """Test term order specifications."""

    def test_lex_by_name(self):
        """Test lex with variable names."""
        M = parse_order("lex:z,y,x", 3, ("x", "y", "z"))

        assert M.rows == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_lex_by_index(self):
        """Test lex with 1-based indices and the default priority."""
        assert parse_order("lex:3,2,1", 3) == parse_order("lex:z,y,x", 3, ("x", "y", "z"))
        assert parse_order("lex:", 2) == TermOrderMatrix.lex([0, 1])

    def test_weight_with_tiebreak(self):
        """Test a weight refined by lex."""
        M = parse_order("weight:1,1;tiebreak=lex:x,y", 2, ("x", "y"))

        assert M.rows == ((1, 1), (1, 0))

    def test_weight_default_tiebreak(self):
        """Test that lex breaks ties by default."""
        M = parse_order("weight:1,2,3", 3)

        assert M.rows == ((1, 2, 3), (1, 0, 0), (0, 1, 0))

    def test_matrix(self):
        """Test a matrix order."""
        assert parse_order("matrix:1,1;1,0", 2).rows == ((1, 1), (1, 0))

    def test_degree_orders(self):
        """Test deglex and degrevlex specifications."""
        assert parse_order("deglex:", 2) == TermOrderMatrix.deglex([0, 1])
        assert parse_order("degrevlex:", 3) == TermOrderMatrix.degrevlex([0, 1, 2])

    @pytest.mark.parametrize(
        "spec, message",
        [
            ("matrix:1,-2,0;0,1,0", "column 2"),
            ("random:", "unknown term order"),
            ("lex:x,x,y", "exactly once"),
            ("lex:w,x,y", "unknown variable"),
            ("lex:4,1,2", "out of range"),
            ("weight:1,2", "length"),
            ("weight:1,a,2", "not a list of integers"),
            ("weight:1,2,3;order=lex:", "unknown weight option"),
        ],
    )
    def test_invalid_orders(self, spec, message):
        """Test rejection of malformed or non-monomial orders."""
        with pytest.raises(TermOrderError, match=message):
            parse_order(spec, 3, ("x", "y", "z"))


class TestParseSymmetry:
    """Test symmetry generator specifications."""

    def test_cycle(self):
        """Test the cyclic shift on five variables."""
        assert parse_symmetry("2,3,4,5,1", 5) == [(1, 2, 3, 4, 0)]

    def test_several_generators(self):
        """Test ;-separated generators."""
        assert parse_symmetry("2,1,3; 1,3,2", 3) == [(1, 0, 2), (0, 2, 1)]

    @pytest.mark.parametrize("spec", ["2,2,3", "1,2", "a,b,c", " ; "])
    def test_invalid(self, spec):
        """Test rejection of non-permutations."""
        with pytest.raises(SymmetryError):
            parse_symmetry(spec, 3)


class TestTextOutput:
    """Test the text formats."""

    def test_sink_basis(self, gfanbig_sink):
        """Test marked term first, remaining terms ascending."""
        assert serialize(gfanbig_sink, variables=("x", "y", "z")) == "{!y^2+x-x^3*y-x^4, !z+y+x}"

    def test_default_names(self, gfanbig_sink):
        """Test x1..xn when no names are given."""
        assert format_basis(gfanbig_sink, ["x1", "x2", "x3"]) == serialize(gfanbig_sink)

    def test_basis_round_trip(self, gfanbig_doc, lex_zyx):
        """Test that every basis of the fan parses back to itself."""
        names = gfanbig_doc.variable_names
        for G in reverse_search(gfanbig_doc.ideal, lex_zyx):
            assert parse_basis(format_basis(G, names), names) == G

    def test_polynomial(self):
        """Test plain polynomials, largest term first."""
        names = ("x", "y")

        assert format_polynomial(parse_polynomial("-y+x^2", names), names) == "x^2-y"
        assert format_polynomial(parse_polynomial("1/2*x-3", names), names) == "1/2*x-3"
        assert format_polynomial(Polynomial.zero(2), names) == "0"

    def test_cone_round_trip(self, gfanbig_sink):
        """Test the cone text format."""
        C = cone_of(gfanbig_sink)
        text = serialize(C)

        assert text.splitlines()[0] == "cone 3"
        assert parse_cone(text).key() == C.key()

    def test_cone_with_equations(self):
        """Test equations in the cone text format."""
        C = Cone(2, ((1, -1),), ((0, 1),))

        assert serialize(C) == "cone 2\neq 1 -1\nineq 0 1"
        with pytest.raises(InputSyntaxError):
            parse_cone("cone 2\nineq 1 2 3")

    def test_facet(self):
        """Test facet normal lines."""
        assert serialize(FacetNormal((-3, 1, 0), True)) == "-3 1 0 flippable"
        assert serialize(FacetNormal((-1, 2, 0), False)) == "-1 2 0"

    def test_input_document(self, gfanbig_doc):
        """Test that a document prints back to an equivalent document."""
        again = parse_input(serialize(gfanbig_doc))

        assert again.generators == gfanbig_doc.generators
        assert again.order == gfanbig_doc.order

    def test_unknown_format(self, gfanbig_sink):
        """Test rejection of unknown formats and types."""
        with pytest.raises(ValueError):
            serialize(gfanbig_sink, "yaml")
        with pytest.raises(TypeError):
            serialize(object())


class TestJsonOutput:
    """Test the JSON formats."""

    def test_rationals_are_strings(self):
        """Test exact coefficients in JSON."""
        data = json.loads(serialize(parse_polynomial("1/3*x-2", ("x",)), "json", ("x",)))

        assert [t["coefficient"] for t in data["terms"]] == ["1/3", "-2/1"]

    def test_fan_summary(self, gfanbig_doc, lex_zyx):
        """Test the fan summary document against the schema."""
        cones = list(reverse_search(gfanbig_doc.ideal, lex_zyx))
        summary = summarize(
            cones, with_f_vector=True, with_universal=True,
            counters=get_stats_collector().snapshot().to_dict(),
        )
        data = validate_fan_json(serialize(summary, "json", gfanbig_doc.variable_names))

        assert data["cone_count"] == 7
        assert data["f_vector"] == [1, 8, 14, 7]
        assert data["h"] == 0
        assert data["maximal_cones"][0]["rays"] == [[-2, -1, -1], [0, 0, 1], [1, 3, 3]]
        assert data["maximal_cones"][0]["basis"][0]["text"] == "!y^2+x-x^3*y-x^4"
        assert data["counters"]["flips"] >= 6

    def test_byte_stable(self, gfanbig_doc, lex_zyx):
        """Test that equal summaries serialize identically."""
        cones = list(reverse_search(gfanbig_doc.ideal, lex_zyx))
        first = serialize(summarize(cones), "json")
        second = serialize(summarize(list(reverse_search(gfanbig_doc.ideal, lex_zyx))), "json")

        assert first == second

    def test_timings_are_opt_in(self, gfanbig_sink):
        """Test that wall_time is only written when asked for."""
        summary = summarize([gfanbig_sink], counters={"flips": 0, "wall_time": 0.25})

        plain = validate_fan_json(serialize(summary, "json"))
        timed = validate_fan_json(serialize(summary, "json", timings=True))

        assert "wall_time" not in plain["counters"]
        assert plain["counters"]["flips"] == 0
        assert timed["counters"]["wall_time"] == "0.250000"

    def test_schema_requires_denominator(self, gfanbig_sink):
        """Test that integer coefficients must be written p/1."""
        data = json.loads(serialize(summarize([gfanbig_sink]), "json"))
        data["maximal_cones"][0]["basis"][0]["terms"][0]["coefficient"] = "1"

        with pytest.raises(jsonschema.ValidationError):
            validate_fan_json(json.dumps(data))

    def test_schema_rejects_float_coefficients(self, gfanbig_sink):
        """Test that the schema catches inexact numbers."""
        data = json.loads(serialize(summarize([gfanbig_sink]), "json"))
        data["maximal_cones"][0]["basis"][0]["terms"][0]["coefficient"] = 0.5

        with pytest.raises(jsonschema.ValidationError):
            validate_fan_json(json.dumps(data))

    def test_missing_f_vector_is_null(self):
        """Test the warning entry for orbit-only summaries."""
        doc = parse_input("Q[x,y]{x^2-y^2}")
        G = next(reverse_search(doc.ideal, TermOrderMatrix.lex([0, 1])))
        data = json.loads(serialize(summarize([G], orbit_sizes=[2], with_f_vector=True), "json"))

        assert data["f_vector"] is None
        assert data["warnings"]
        assert data["maximal_cones"][0]["orbit_size"] == 2


class TestSvg:
    """Test slice drawings."""

    def test_gfanbig_regions(self, gfanbig_doc, lex_zyx):
        """Test one region per maximal cone."""
        summary = summarize(list(reverse_search(gfanbig_doc.ideal, lex_zyx)))
        svg = render_slice_svg(summary, gfanbig_doc.variable_names)

        assert svg.startswith('<?xml version="1.0"')
        assert svg.count('class="region"') == 7
        assert 'id="positive-orthant"' in svg
        assert 'class="wall"' in svg

    def test_deterministic(self, gfanbig_doc, lex_zyx):
        """Test byte-identical output for the same fan."""
        summary = summarize(list(reverse_search(gfanbig_doc.ideal, lex_zyx)))

        assert render_slice_svg(summary) == render_slice_svg(summary)

    def test_canvas_size(self, gfanbig_sink):
        """Test the canvas size option."""
        svg = render_slice_svg(summarize([gfanbig_sink]), canvas_size=300)

        assert 'width="300"' in svg

    def test_unit_ideal_fills_simplex(self):
        """Test that the single cone R^3 is drawn as the whole triangle."""
        svg = render_slice_svg(summarize([unit_basis(3)]))
        regions = re.findall(r'<polygon class="region" points="([^"]+)"', svg)
        simplex = re.search(r'<polygon id="positive-orthant" points="([^"]+)"', svg).group(1)

        assert len(regions) == 1
        assert regions[0] == simplex
        assert 'class="wall"' not in svg

    def test_window_defaults_to_simplex(self, gfanbig_doc, lex_zyx):
        """Test the chart window without render.extent and with a wider extent."""
        summary = summarize(list(reverse_search(gfanbig_doc.ideal, lex_zyx)))
        window = re.compile(r'<polygon class="window" points="([^"]+)"')
        orthant = re.compile(r'<polygon id="positive-orthant" points="([^"]+)"')

        svg = render_slice_svg(summary)
        wide = render_slice_svg(summary, extent=1)

        assert window.search(svg).group(1) == orthant.search(svg).group(1)
        assert window.search(wide).group(1) != orthant.search(wide).group(1)
        assert wide.count('class="region"') == 7

    def test_requires_three_variables(self, two_points):
        """Test rejection of other ring sizes."""
        with pytest.raises(ValueError):
            render_slice_svg(summarize([two_points]))


class TestRunStats:
    """Test counter reports."""

    def test_text(self, gfanbig_doc, lex_zyx):
        """Test one `name: value` line per counter."""
        list(reverse_search(gfanbig_doc.ideal, lex_zyx))
        lines = serialize(get_stats_collector().snapshot()).splitlines()
        counters = dict(line.split(": ") for line in lines)

        assert set(counters) == {
            "facet_computations", "shoot_computations", "flips",
            "lp_solves", "buchberger_runs", "wall_time",
        }
        assert int(counters["buchberger_runs"]) == int(counters["flips"]) + 1
        assert len(counters["wall_time"].split(".")[1]) == 6

    def test_export(self, gfanbig_sink, tmp_path):
        """Test writing the counters to a JSON file."""
        cone_of(gfanbig_sink)
        target = tmp_path / "stats.json"
        get_stats_collector().export_to_json(str(target))

        data = json.loads(target.read_text(encoding="utf-8"))
        assert data["lp_solves"] > 0
        assert "started_at" not in data
