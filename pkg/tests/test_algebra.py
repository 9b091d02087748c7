"""Test polynomial arithmetic, term orders and Buchberger's algorithm."""

import random
from fractions import Fraction

import pytest
import sympy

from src.algebra import (
    IdealInput,
    MarkedPolynomial,
    Ordering,
    Polynomial,
    TermOrderMatrix,
    autoreduce,
    buchberger,
    compare_exponents,
    initial_form,
    initial_term,
    normal_form,
    s_polynomial,
    unit_basis,
)
from src.exceptions import IncoherentMarkingError, TermOrderError
from src.serialization import parse_polynomial
from src.utils.metrics import get_stats_collector

XYZ = ("x", "y", "z")


def poly(text: str, names=XYZ) -> Polynomial:
    return parse_polynomial(text, names)


class TestPolynomial:
    """Test exact polynomial arithmetic."""

    def test_arithmetic(self):
        """Test sums, products and powers."""
        x, y = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
        one = Polynomial.constant(1, 2)

        assert (x + one) ** 2 == x * x + x * 2 + one
        assert (x - y) * (x + y) == x * x - y * y
        assert (x - x).is_zero()

    def test_rational_coefficients(self):
        """Test that coefficients stay exact."""
        f = poly("1/3*x+2/7*y")

        assert f.coefficient((1, 0, 0)) == Fraction(1, 3)
        assert (f * 21).coefficient((0, 1, 0)) == 6

    def test_canonical_term_order(self):
        """Test that terms are listed in ascending graded-lex order."""
        f = poly("x^4+x^3*y+y^2+x")

        assert [t.exponent for t in f.terms] == [(1, 0, 0), (0, 2, 0), (3, 1, 0), (4, 0, 0)]

    def test_normalized(self):
        """Test scaling the largest term to coefficient one."""
        f = poly("2*x-4*y^2").normalized()

        assert f.coefficient((0, 2, 0)) == 1
        assert f.coefficient((1, 0, 0)) == Fraction(-1, 2)

    def test_permuted(self):
        """Test variable substitution."""
        f = poly("x^2*y+z")

        assert f.permuted((1, 2, 0)) == poly("y^2*z+x")

    def test_invalid_exponents(self):
        """Test rejection of malformed exponents."""
        with pytest.raises(ValueError):
            Polynomial({(1, -1): 1}, 2)
        with pytest.raises(ValueError):
            Polynomial({(1,): 1}, 2)

    def test_ideal_input(self):
        """Test dropping of zero generators."""
        ideal = IdealInput(("x", "y"), (Polynomial.zero(2), Polynomial.variable(0, 2)))

        assert len(ideal.generators) == 1
        with pytest.raises(ValueError):
            IdealInput(("x",), (Polynomial.zero(1),))
        with pytest.raises(ValueError):
            IdealInput(("x", "x"), (Polynomial.variable(0, 2),))


class TestTermOrder:
    """Test term order matrices."""

    def test_lex_comparison(self):
        """Test y² ≻ x³y under lex with z ≻ y ≻ x."""
        M = TermOrderMatrix.lex([2, 1, 0])

        assert compare_exponents(M, (0, 2, 0), (3, 1, 0)) is Ordering.GREATER
        assert compare_exponents(M, (1, 1, 1), (1, 1, 1)) is Ordering.EQUAL

    def test_deglex_comparison(self):
        """Test the matrix [[1,1],[1,0]]."""
        M = TermOrderMatrix([[1, 1], [1, 0]])

        assert compare_exponents(M, (0, 3), (2, 0)) is Ordering.GREATER
        assert compare_exponents(M, (2, 0), (0, 3)) is Ordering.LESS

    def test_degrevlex(self):
        """Test that y² ≻ xz in degrevlex with x ≻ y ≻ z."""
        M = TermOrderMatrix.degrevlex([0, 1, 2])

        assert compare_exponents(M, (0, 2, 0), (1, 0, 1)) is Ordering.GREATER
        assert compare_exponents(M, (1, 0, 0), (0, 1, 0)) is Ordering.GREATER

    def test_completion(self):
        """Test that a weight row is completed with unit rows."""
        M = TermOrderMatrix([[1, 1, 1]])

        assert M.rows == ((1, 1, 1), (1, 0, 0), (0, 1, 0))
        assert M.supplied == 1

    def test_rejects_negative_column(self):
        """Test the column check."""
        with pytest.raises(TermOrderError, match="column 2"):
            TermOrderMatrix([[1, -2], [0, 1]])

    def test_with_weight(self):
        """Test refining a weight by a tie-breaking order."""
        M = TermOrderMatrix.lex([0, 1]).with_weight((1, 1))

        assert M.rows == ((1, 1), (1, 0))

    def test_length_mismatch(self):
        """Test comparisons of vectors of the wrong length."""
        with pytest.raises(ValueError):
            compare_exponents(TermOrderMatrix.lex([0, 1]), (1, 0), (1, 0, 0))

    @pytest.mark.parametrize(
        "M",
        [
            TermOrderMatrix.lex([2, 0, 1]),
            TermOrderMatrix.deglex([0, 1, 2]),
            TermOrderMatrix.degrevlex([0, 1, 2]),
            TermOrderMatrix.lex([0, 1, 2]).with_weight((3, 1, 2)),
            TermOrderMatrix([[1, 0, 2], [0, 1, 0]]),
        ],
    )
    def test_total_order_compatible_with_products(self, M):
        """Test antisymmetry, transitivity and a > b ⇒ a+c > b+c on random exponents."""
        rng = random.Random(11)
        flipped = {Ordering.GREATER: Ordering.LESS, Ordering.LESS: Ordering.GREATER, Ordering.EQUAL: Ordering.EQUAL}

        def exponent():
            return tuple(rng.randint(0, 4) for _ in range(3))

        for _ in range(200):
            a, b, c = exponent(), exponent(), exponent()
            ab = compare_exponents(M, a, b)

            assert compare_exponents(M, b, a) is flipped[ab]
            assert (ab is Ordering.EQUAL) == (a == b)
            if ab is Ordering.GREATER and compare_exponents(M, b, c) is Ordering.GREATER:
                assert compare_exponents(M, a, c) is Ordering.GREATER
            shifted_a = tuple(x + y for x, y in zip(a, c))
            shifted_b = tuple(x + y for x, y in zip(b, c))
            assert compare_exponents(M, shifted_a, shifted_b) is ab


class TestInitialForms:
    """Test initial terms and initial forms."""

    def test_initial_term(self):
        """Test the lex initial term of the first basis element."""
        f = poly("y^2+x-x^3*y-x^4")
        term = initial_term(TermOrderMatrix.lex([2, 1, 0]), f)

        assert term.exponent == (0, 2, 0)
        assert term.coefficient == 1

    def test_initial_form_single_term(self):
        """Test a weight selecting one term."""
        form, degree = initial_form((1, 4, 5), poly("z+y+x"))

        assert form == poly("z")
        assert degree == 5

    def test_initial_form_several_terms(self):
        """Test a weight on a facet of the lex cone."""
        form, _ = initial_form((-2, -1, 0), poly("y^2+x-x^3*y-x^4"))

        assert form == poly("y^2+x")

    def test_zero_polynomial(self):
        """Test that the zero polynomial has no initial term."""
        with pytest.raises(ValueError):
            initial_term(TermOrderMatrix.lex([0]), Polynomial.zero(1))


class TestReduction:
    """Test marked reduction."""

    def test_normal_form(self, gfanbig_sink):
        """Test division by the lex basis of the three-variable example."""
        r = normal_form(poly("x^3*z"), gfanbig_sink)

        assert r == poly("-x^3*y-x^4")
        assert not any(gfanbig_sink.in_initial_ideal(e) for e in r.exponents())

    def test_normal_form_modulo_ideal(self, gfanbig_sink):
        """Test that adding an ideal member leaves the normal form unchanged."""
        rng = random.Random(5)
        for _ in range(15):
            f = _random_polynomial(rng, 3)
            h = Polynomial.zero(3)
            for g in gfanbig_sink:
                h = h + _random_polynomial(rng, 3) * g.body

            assert normal_form(f + h, gfanbig_sink) == normal_form(f, gfanbig_sink)

    def test_s_polynomial(self):
        """Test that marked terms cancel with the expected signs."""
        g1 = MarkedPolynomial(poly("x^2-y", ("x", "y")), (2, 0))
        g2 = MarkedPolynomial(poly("x*y-1", ("x", "y")), (1, 1))

        assert s_polynomial(g1, g2) == poly("x-y^2", ("x", "y"))

    def test_marked_coefficient_scaled(self):
        """Test that the marked coefficient becomes one."""
        g = MarkedPolynomial(poly("3*x-6*y", ("x", "y")), (1, 0))

        assert g.body == poly("x-2*y", ("x", "y"))
        with pytest.raises(ValueError):
            MarkedPolynomial(poly("x", ("x", "y")), (0, 1))

    def test_step_limit(self):
        """Test that a non-terminating marking is reported."""
        g = MarkedPolynomial(poly("x-x^2", ("x",)), (1,))

        with pytest.raises(IncoherentMarkingError):
            normal_form(poly("x", ("x",)), [g], step_limit=50)

    def test_autoreduce(self):
        """Test inter-reduction into a reduced basis."""
        names = ("x", "y")
        G = autoreduce([
            MarkedPolynomial(poly("x^2-y", names), (2, 0)),
            MarkedPolynomial(poly("x^3-x*y", names), (3, 0)),
            MarkedPolynomial(poly("y^2+x^2", names), (0, 2)),
        ])

        assert G.is_reduced()
        assert [g.marked for g in G] == [(2, 0), (0, 2)]
        assert G.elements[1].body == poly("y^2+y", names)

    def test_autoreduce_keeps_lone_term(self):
        """Test that an element reduced to a single term is re-marked there."""
        names = ("x", "y")
        G = autoreduce([
            MarkedPolynomial(poly("x-y", names), (1, 0)),
            MarkedPolynomial(poly("x*y-y^2+y", names), (1, 1)),
        ])

        assert [g.body for g in G] == [poly("x", names), poly("y", names)]


class TestBuchberger:
    """Test Buchberger's algorithm."""

    def test_gfanbig(self, gfanbig_doc, lex_zyx, basis_text):
        """Test the lex basis of the three-variable example."""
        G = buchberger(gfanbig_doc.generators, lex_zyx)

        assert G == basis_text("{!y^2+x-x^3*y-x^4, !z+y+x}")
        assert G.is_reduced()

    def test_unit_ideal(self):
        """Test that a constant in the ideal gives the basis {1}."""
        names = ("x", "y")
        G = buchberger([poly("x", names), poly("x-1", names)], TermOrderMatrix.lex([0, 1]))

        assert G == unit_basis(2)
        assert G.is_unit()

    def test_all_zero_generators(self):
        """Test rejection of the zero ideal."""
        with pytest.raises(ValueError):
            buchberger([Polynomial.zero(2)], TermOrderMatrix.lex([0, 1]))

    def test_chain_criterion_agrees(self, gfanbig_doc):
        """Test that the chain criterion does not change the result."""
        M = TermOrderMatrix.degrevlex([0, 1, 2])
        plain = buchberger(gfanbig_doc.generators, M, chain_criterion=False)
        chained = buchberger(gfanbig_doc.generators, M, chain_criterion=True)

        assert plain == chained

    @pytest.mark.parametrize("seed", [2, 3, 4])
    def test_independent_of_presentation(self, seed):
        """Test that permuted and rescaled generators give the same basis."""
        rng = random.Random(seed)
        M = TermOrderMatrix.degrevlex([0, 1, 2])
        gens = [f for f in (_random_polynomial(rng, 3) for _ in range(3)) if not f.is_zero()]
        expected = buchberger(gens, M)

        for _ in range(3):
            shuffled = list(gens)
            rng.shuffle(shuffled)
            scaled = [f * Fraction(rng.choice([-5, -2, 1, 3, 7]), rng.randint(1, 4)) for f in shuffled]

            assert buchberger(scaled, M) == expected

    def test_counts_runs(self, gfanbig_doc, lex_zyx):
        """Test the Buchberger counter."""
        buchberger(gfanbig_doc.generators, lex_zyx)

        assert get_stats_collector().snapshot().buchberger_runs == 1


def _random_polynomial(rng: random.Random, n: int) -> Polynomial:
    coeffs = {}
    for _ in range(rng.randint(2, 4)):
        degree = rng.randint(0, 3)
        exponent = [0] * n
        for _ in range(degree):
            exponent[rng.randrange(n)] += 1
        coeffs[tuple(exponent)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return Polynomial(coeffs, n)


def _to_sympy(f: Polynomial, symbols):
    return sum(
        sympy.Rational(t.coefficient.numerator, t.coefficient.denominator)
        * sympy.Mul(*[s ** k for s, k in zip(symbols, t.exponent)])
        for t in f.terms
    )


class TestBuchbergerOracle:
    """Test reduced bases against sympy's Gröbner basis implementation."""

    @pytest.mark.slow
    @pytest.mark.parametrize("order_name", ["lex", "grlex", "grevlex"])
    def test_random_ideals(self, order_name):
        """Test random ideals with two generators in three variables."""
        symbols = sympy.symbols("x y z")
        orders = {
            "lex": TermOrderMatrix.lex([0, 1, 2]),
            "grlex": TermOrderMatrix.deglex([0, 1, 2]),
            "grevlex": TermOrderMatrix.degrevlex([0, 1, 2]),
        }
        rng = random.Random(7)
        for _ in range(10):
            gens = [_random_polynomial(rng, 3) for _ in range(2)]
            gens = [f for f in gens if not f.is_zero()]
            if not gens:
                continue
            ours = [_to_sympy(g.body, symbols) for g in buchberger(gens, orders[order_name])]
            theirs = sympy.groebner(
                [_to_sympy(f, symbols) for f in gens], *symbols, order=order_name, domain="QQ"
            ).exprs

            assert len(ours) == len(theirs)
            for f in ours:
                assert any(sympy.expand(f - g) == 0 for g in theirs)
