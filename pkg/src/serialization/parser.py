"""
Parsing of input documents, marked bases, term orders and symmetries.

An input document looks like

    Q[x,y,z]{x+y+z, x^3*z+x+y^2}
    @order lex:z,y,x
    @symmetry 2,1,3

Generators may carry a `!` in front of one term to mark it. Whitespace is
insignificant and `#` starts a comment that runs to the end of the line.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra import IdealInput, MarkedBasis, MarkedPolynomial, Polynomial, TermOrderMatrix
from ..algebra.monomials import ExponentVector
from ..exceptions import InputSyntaxError, SymmetryError, TermOrderError
from ..fan.symmetry import Permutation, check_permutation
from ..lp import Cone
from ..utils.logger import get_logger

logger = get_logger(__name__)

FIELD_TAG = "Q"
ORDER_KINDS = ("lex", "deglex", "degrevlex", "weight", "matrix")


@dataclass(frozen=True)
class InputDocument:
    """A parsed ring declaration with its generators and optional directives."""

    ideal: IdealInput
    markings: Tuple[Optional[ExponentVector], ...]
    order: Optional[str] = None
    symmetry: Optional[str] = None
    field: str = FIELD_TAG

    @property
    def variable_names(self) -> Tuple[str, ...]:
        return self.ideal.variable_names

    @property
    def generators(self) -> Tuple[Polynomial, ...]:
        return self.ideal.generators

    @property
    def is_marked(self) -> bool:
        return all(m is not None for m in self.markings)

    def marked_basis(self) -> MarkedBasis:
        """The generators as a marked basis; every generator must carry a `!`."""
        if not self.is_marked:
            raise InputSyntaxError("a marked basis needs a `!` on one term of every polynomial")
        return MarkedBasis(
            (MarkedPolynomial(f, m) for f, m in zip(self.generators, self.markings)),
            self.ideal.n,
        )


class _Scanner:
    """Character scanner with line/column tracking for error messages."""

    def __init__(self, text: str, variables: Optional[Sequence[str]] = None):
        self.text = text
        self.pos = 0
        self.variables: Dict[str, int] = {}
        if variables is not None:
            self.declare(variables)

    def declare(self, names: Sequence[str]) -> None:
        self.variables = {name: i for i, name in enumerate(names)}

    def location(self, pos: Optional[int] = None) -> Tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        column = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, column

    def error(self, message: str, pos: Optional[int] = None) -> InputSyntaxError:
        line, column = self.location(pos)
        return InputSyntaxError(message, line, column)

    def skip(self) -> None:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch.isspace():
                self.pos += 1
            elif ch == "#":
                end = self.text.find("\n", self.pos)
                self.pos = len(self.text) if end < 0 else end
            else:
                break

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str) -> None:
        if not self.accept(ch):
            found = self.peek() or "end of input"
            raise self.error(f"expected '{ch}', found '{found}'")

    def at_end(self) -> bool:
        return self.peek() == ""

    def identifier(self) -> str:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
            return self.text[start:self.pos]
        raise self.error(f"expected an identifier, found '{self.peek() or 'end of input'}'")

    def unsigned(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error(f"expected a number, found '{self.peek() or 'end of input'}'")
        return int(self.text[start:self.pos])

    # -- polynomials ------------------------------------------------------

    def factor(self, exponent: List[int]) -> None:
        start = self.pos
        name = self.identifier()
        if name not in self.variables:
            raise self.error(f"unknown identifier '{name}'", start)
        power = 1
        if self.accept("^"):
            power = self.unsigned()
        exponent[self.variables[name]] += power

    def term(self) -> Tuple[Fraction, ExponentVector, bool]:
        """[!] [coefficient] [*] factor (* factor)*, or a bare coefficient."""
        marked = self.accept("!")
        exponent = [0] * len(self.variables)
        coefficient = Fraction(1)
        if self.peek().isdigit():
            numerator = self.unsigned()
            denominator = 1
            if self.accept("/"):
                pos = self.pos
                denominator = self.unsigned()
                if denominator == 0:
                    raise self.error("zero denominator", pos)
            coefficient = Fraction(numerator, denominator)
            if self.accept("*") or self.peek().isalpha() or self.peek() == "_":
                self.factor(exponent)
            else:
                return coefficient, tuple(exponent), marked
        else:
            self.factor(exponent)
        while self.accept("*"):
            self.factor(exponent)
        return coefficient, tuple(exponent), marked

    def polynomial(self) -> Tuple[Polynomial, Optional[ExponentVector]]:
        start = self.pos
        n = len(self.variables)
        coeffs: Dict[ExponentVector, Fraction] = {}
        marked: Optional[ExponentVector] = None
        first = True
        while True:
            ch = self.peek()
            if ch in ("+", "-"):
                self.pos += 1
                sign = -1 if ch == "-" else 1
            elif first:
                sign = 1
            else:
                break
            term_start = self.pos
            c, e, is_marked = self.term()
            if is_marked:
                if marked is not None:
                    raise self.error("more than one marked term in a polynomial", term_start)
                marked = e
            coeffs[e] = coeffs.get(e, Fraction(0)) + sign * c
            first = False
        poly = Polynomial(coeffs, n)
        if marked is not None and marked not in poly:
            raise self.error("the marked term cancels", start)
        return poly, marked

    def polynomial_list(self) -> List[Tuple[Polynomial, Optional[ExponentVector], int]]:
        self.expect("{")
        items = []
        if self.accept("}"):
            return items
        while True:
            start = self.pos
            poly, marked = self.polynomial()
            items.append((poly, marked, start))
            if self.accept("}"):
                return items
            self.expect(",")


def _directives(scanner: _Scanner) -> Dict[str, str]:
    found: Dict[str, str] = {}
    while not scanner.at_end():
        start = scanner.pos
        scanner.expect("@")
        name = scanner.identifier()
        if name not in ("order", "symmetry"):
            raise scanner.error(f"unknown directive '@{name}'", start)
        if name in found:
            raise scanner.error(f"duplicate directive '@{name}'", start)
        end = scanner.text.find("\n", scanner.pos)
        end = len(scanner.text) if end < 0 else end
        value = scanner.text[scanner.pos:end].split("#", 1)[0].strip()
        if not value:
            raise scanner.error(f"directive '@{name}' needs a value", start)
        found[name] = value
        scanner.pos = end
    return found


def parse_input(text: str) -> InputDocument:
    """
    Parse an input document.

    Args:
        text: Document text

    Returns:
        InputDocument

    Raises:
        InputSyntaxError: On malformed input, with line and column
    """
    scanner = _Scanner(text)
    pos = scanner.pos
    tag = scanner.identifier()
    if tag != FIELD_TAG:
        raise scanner.error(f"unsupported coefficient field '{tag}', only '{FIELD_TAG}' is available", pos)

    scanner.expect("[")
    names = [scanner.identifier()]
    while scanner.accept(","):
        pos = scanner.pos
        name = scanner.identifier()
        if name in names:
            raise scanner.error(f"variable '{name}' declared twice", pos)
        names.append(name)
    scanner.expect("]")
    scanner.declare(names)

    items = scanner.polynomial_list()
    if not items:
        raise scanner.error("empty generator list")
    kept = [(p, m) for p, m, _ in items if not p.is_zero()]
    if not kept:
        raise scanner.error("all generators are zero")

    directives = _directives(scanner)
    document = InputDocument(
        ideal=IdealInput(tuple(names), tuple(p for p, _ in kept)),
        markings=tuple(m for _, m in kept),
        order=directives.get("order"),
        symmetry=directives.get("symmetry"),
    )
    logger.debug(f"Parsed {len(kept)} generators in {len(names)} variables")
    return document


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse a single (unmarked) polynomial over the given variables."""
    scanner = _Scanner(text, variables)
    poly, marked = scanner.polynomial()
    if not scanner.at_end():
        raise scanner.error(f"unexpected '{scanner.peek()}'")
    if marked is not None:
        raise scanner.error("unexpected `!` marker in a plain polynomial")
    return poly


def parse_basis(text: str, variables: Sequence[str]) -> MarkedBasis:
    """
    Parse a marked basis `{!m1+..., !m2+...}` over the given variables.

    Raises:
        InputSyntaxError: If an element has no marked term
    """
    scanner = _Scanner(text, variables)
    items = scanner.polynomial_list()
    if not scanner.at_end():
        raise scanner.error(f"unexpected '{scanner.peek()}' after the basis")
    if not items:
        raise scanner.error("empty basis")
    elements = []
    for poly, marked, start in items:
        if marked is None:
            raise scanner.error("every basis element needs a `!` marked term", start)
        elements.append(MarkedPolynomial(poly, marked))
    return MarkedBasis(elements, len(variables))


def _variable_index(token: str, names: Optional[Sequence[str]], n: int) -> int:
    token = token.strip()
    if token.isdigit():
        index = int(token) - 1
        if not 0 <= index < n:
            raise TermOrderError(f"variable index {token} is out of range 1..{n}")
        return index
    if names is None or token not in names:
        raise TermOrderError(f"unknown variable '{token}' in term order")
    return list(names).index(token)


def _priority(body: str, names: Optional[Sequence[str]], n: int) -> List[int]:
    if not body.strip():
        return list(range(n))
    priority = [_variable_index(t, names, n) for t in body.split(",")]
    if sorted(priority) != list(range(n)):
        raise TermOrderError(f"'{body}' does not list every variable exactly once")
    return priority


def _integers(body: str) -> List[int]:
    try:
        return [int(t) for t in body.split(",")]
    except ValueError:
        raise TermOrderError(f"'{body}' is not a list of integers")


def parse_order(spec: str, n: int, variable_names: Optional[Sequence[str]] = None) -> TermOrderMatrix:
    """
    Parse a term order specification.

    Accepted forms: `lex:<perm>`, `deglex:<perm>`, `degrevlex:<perm>`,
    `weight:<w>;tiebreak=<spec>` and `matrix:<row>;<row>;...`. A permutation
    lists variables (by name or 1-based index) from largest to smallest; an
    empty permutation means the declared order.

    Raises:
        TermOrderError: If the specification is malformed or not a term order
    """
    kind, _, body = spec.strip().partition(":")
    kind = kind.strip()
    if kind not in ORDER_KINDS:
        raise TermOrderError(f"unknown term order '{kind}', expected one of {', '.join(ORDER_KINDS)}")

    if kind == "lex":
        return TermOrderMatrix.lex(_priority(body, variable_names, n), n)
    if kind == "deglex":
        return TermOrderMatrix.deglex(_priority(body, variable_names, n), n)
    if kind == "degrevlex":
        return TermOrderMatrix.degrevlex(_priority(body, variable_names, n), n)
    if kind == "matrix":
        rows = [_integers(r) for r in body.split(";") if r.strip()]
        if not rows:
            raise TermOrderError("a matrix order needs at least one row")
        return TermOrderMatrix(rows, n)

    weight, _, rest = body.partition(";")
    omega = _integers(weight)
    if len(omega) != n:
        raise TermOrderError(f"weight vector has length {len(omega)}, expected {n}")
    tiebreak = "lex:"
    if rest.strip():
        key, _, value = rest.partition("=")
        if key.strip() != "tiebreak":
            raise TermOrderError(f"unknown weight option '{key.strip()}'")
        tiebreak = value
    return parse_order(tiebreak, n, variable_names).with_weight(omega)


def parse_symmetry(spec: str, n: int) -> List[Permutation]:
    """
    Parse symmetry generators: `;`-separated lists of 1-based images.

    Returns:
        Permutations as 0-based image tuples

    Raises:
        SymmetryError: If a generator is not a permutation of degree n
    """
    generators = []
    for chunk in spec.split(";"):
        if not chunk.strip():
            continue
        try:
            images = [int(t) - 1 for t in chunk.split(",")]
        except ValueError:
            raise SymmetryError(f"'{chunk.strip()}' is not a list of integers")
        generators.append(check_permutation(images, n))
    if not generators:
        raise SymmetryError("no symmetry generators given")
    return generators


def parse_cone(text: str) -> Cone:
    """
    Parse the text form of a cone:

        cone <n>
        eq <e_1> ... <e_n>
        ineq <a_1> ... <a_n>
    """
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [(i + 1, line) for i, line in enumerate(lines) if line]
    if not lines or not lines[0][1].startswith("cone"):
        raise InputSyntaxError("a cone starts with 'cone <n>'", 1, 1)
    try:
        n = int(lines[0][1].split()[1])
    except (IndexError, ValueError):
        raise InputSyntaxError("a cone starts with 'cone <n>'", lines[0][0], 1)
    equations, inequalities = [], []
    for number, line in lines[1:]:
        keyword, *values = line.split()
        if keyword not in ("eq", "ineq"):
            raise InputSyntaxError(f"unknown cone row '{keyword}'", number, 1)
        try:
            row = tuple(int(v) for v in values)
        except ValueError:
            raise InputSyntaxError("cone rows hold integers", number, len(keyword) + 2)
        if len(row) != n:
            raise InputSyntaxError(f"row has {len(row)} entries, expected {n}", number, 1)
        (equations if keyword == "eq" else inequalities).append(row)
    return Cone(n, tuple(equations), tuple(inequalities))
