"""Parsing and printing of ideal and tower expressions.

Grammar (whitespace-insensitive, left-associative `*`, postfix `^`):

    expr     := factor ("*" factor)*
    factor   := atom ("^" INT)?
    atom     := "(" monomial ("," monomial)* ")"
              | "m"
              | "n" "(" INT "," INT ")"
              | "tower" "(" branch ";" "g" "=" poly ";" "exps" "=" "[" INT ("," INT)* "]" ")"
    monomial := "1" | var ("^" INT)? (var ("^" INT)?)*

Variables are fixed to x and y; a z anywhere is rejected as out of scope
(fat points in three or more variables).  Every expression elaborates to a
monomial ideal, a tower product, or both; a product mixing a non-monomial
tower with a raw generator list has neither form and is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, UnsupportedError
from .ideals import MAXIMAL_IDEAL, MonomialIdeal
from .normal_factor import NabFactor, n_ab
from .towers import Factor, Tower, TowerProduct, make_tower

_SYMBOLS = "^*(),;=[]+-/"


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", or the symbol itself
    value: str
    pos: int


def _tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalpha() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], i))
            i = j
        elif c in _SYMBOLS:
            tokens.append(Token(c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", text, i)
    tokens.append(Token("end", "", len(text)))
    return tokens


@dataclass(frozen=True)
class Elaborated:
    """The two elaborations of an expression; either may be missing."""

    ideal: MonomialIdeal | None
    factors: tuple[Factor, ...] | None

    def require_ideal(self) -> MonomialIdeal:
        if self.ideal is None:
            raise UnsupportedError(
                "this expression contains a non-monomial tower and does not "
                "expand to a monomial ideal"
            )
        return self.ideal

    def require_towers(self) -> TowerProduct:
        if self.factors is None:
            raise UnsupportedError(
                "this expression is not a product of towers (raw generator "
                "lists and n(a,b) atoms have no tower form)"
            )
        return TowerProduct.from_factors(self.factors)


def _combine(left: Elaborated, right: Elaborated) -> Elaborated:
    ideal = None
    if left.ideal is not None and right.ideal is not None:
        ideal = left.ideal * right.ideal
    factors = None
    if left.factors is not None and right.factors is not None:
        factors = left.factors + right.factors
    return Elaborated(ideal=ideal, factors=factors)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, message: str, token: Token | None = None):
        token = token or self.peek()
        raise ParseError(message, self.text, token.pos)

    def expect(self, kind: str, what: str) -> Token:
        if self.peek().kind != kind:
            self.fail(f"expected {what}")
        return self.advance()

    def expect_int(self, what: str) -> int:
        return int(self.expect("int", what).value)

    # -- grammar -------------------------------------------------------------

    def parse(self) -> Elaborated:
        value = self.expr()
        if self.peek().kind != "end":
            self.fail("unexpected trailing input")
        return value

    def expr(self) -> Elaborated:
        value = self.factor()
        while self.peek().kind == "*":
            self.advance()
            value = _combine(value, self.factor())
        return value

    def factor(self) -> Elaborated:
        value = self.atom()
        if self.peek().kind == "^":
            self.advance()
            d = self.expect_int("an integer exponent")
            ideal = value.ideal**d if value.ideal is not None else None
            factors = value.factors * d if value.factors is not None and d >= 1 else None
            value = Elaborated(ideal=ideal, factors=factors)
        return value

    def atom(self) -> Elaborated:
        token = self.peek()
        if token.kind == "(":
            return self.generator_list()
        if token.kind == "name" and token.value == "m":
            self.advance()
            return Elaborated(ideal=MAXIMAL_IDEAL, factors=(Factor(None, (), 1),))
        if token.kind == "name" and token.value == "n":
            self.advance()
            self.expect("(", "'(' after n")
            a = self.expect_int("alpha")
            self.expect(",", "','")
            b = self.expect_int("beta")
            self.expect(")", "')'")
            return Elaborated(ideal=n_ab(a, b), factors=None)
        if token.kind == "name" and token.value == "tower":
            return self.tower_literal()
        self.fail("expected '(', 'm', 'n(a,b)' or 'tower(...)'")

    def generator_list(self) -> Elaborated:
        self.expect("(", "'('")
        gens = [self.monomial()]
        while self.peek().kind == ",":
            self.advance()
            gens.append(self.monomial())
        self.expect(")", "')' closing the generator list")
        return Elaborated(ideal=MonomialIdeal(gens), factors=None)

    def monomial(self) -> tuple[int, int]:
        token = self.peek()
        if token.kind == "int":
            if token.value != "1":
                self.fail("the only constant monomial is 1")
            self.advance()
            return (0, 0)
        exponents = {"x": None, "y": None}
        saw_variable = False
        while self.peek().kind == "name":
            name = self.advance()
            for offset, letter in enumerate(name.value):
                if letter == "z":
                    raise UnsupportedError(
                        "three-variable input: only fat points in the plane "
                        "(variables x and y) are supported"
                    )
                if letter not in exponents:
                    raise ParseError(
                        f"unknown variable {letter!r}", self.text, name.pos + offset
                    )
                if exponents[letter] is not None:
                    raise ParseError(
                        f"variable {letter!r} repeated in a monomial",
                        self.text,
                        name.pos + offset,
                    )
                exponents[letter] = 1
                saw_variable = True
                last = letter
            if self.peek().kind == "^":
                self.advance()
                exponents[last] = self.expect_int("an integer exponent")
        if not saw_variable:
            self.fail("expected a monomial")
        return (exponents["x"] or 0, exponents["y"] or 0)

    def tower_literal(self) -> Elaborated:
        self.expect("name", "'tower'")
        self.expect("(", "'(' after tower")
        branch_token = self.expect("name", "a branch ('x' or 'y')")
        if branch_token.value not in ("x", "y"):
            self.fail("tower branch must be 'x' or 'y'", branch_token)
        branch = branch_token.value
        self.expect(";", "';'")
        key = self.expect("name", "'g'")
        if key.value != "g":
            self.fail("expected 'g'", key)
        self.expect("=", "'='")
        tangent = self.tangent_poly("y" if branch == "x" else "x")
        self.expect(";", "';'")
        key = self.expect("name", "'exps'")
        if key.value != "exps":
            self.fail("expected 'exps'", key)
        self.expect("=", "'='")
        self.expect("[", "'['")
        exps = [self.expect_int("an exponent")]
        while self.peek().kind == ",":
            self.advance()
            exps.append(self.expect_int("an exponent"))
        self.expect("]", "']'")
        self.expect(")", "')' closing the tower")
        tower = make_tower(branch, tangent, exps)
        ideal = tower.ideal() if tower.is_monomial else None
        factors = tuple(Factor(branch, tower.tangent, k) for k in tower.exponents)
        return Elaborated(ideal=ideal, factors=factors)

    def tangent_poly(self, variable: str) -> list[Fraction]:
        """Polynomial in the branch-opposite variable with rational coefficients
        and zero constant term; returns dense coefficients of degree 1, 2, ..."""
        coefficients: dict[int, Fraction] = {}
        sign = Fraction(1)
        first = True
        while True:
            token = self.peek()
            if token.kind == "+":
                self.advance()
                sign = Fraction(1)
            elif token.kind == "-":
                self.advance()
                sign = Fraction(-1)
            elif not first:
                break
            coefficient, degree = self.tangent_term(variable)
            coefficients[degree] = coefficients.get(degree, Fraction(0)) + sign * coefficient
            sign = Fraction(1)
            first = False
            if self.peek().kind not in ("+", "-"):
                break
        if coefficients.get(0, Fraction(0)) != 0:
            self.fail("the tangent polynomial must vanish at 0")
        top = max((d for d, c in coefficients.items() if c != 0), default=0)
        return [coefficients.get(d, Fraction(0)) for d in range(1, top + 1)]

    def tangent_term(self, variable: str) -> tuple[Fraction, int]:
        coefficient = Fraction(1)
        explicit_coefficient = False
        if self.peek().kind == "int":
            numerator = self.expect_int("a coefficient")
            denominator = 1
            if self.peek().kind == "/":
                self.advance()
                denominator = self.expect_int("a denominator")
                if denominator == 0:
                    self.fail("zero denominator")
            coefficient = Fraction(numerator, denominator)
            explicit_coefficient = True
            if self.peek().kind == "*":
                self.advance()
        token = self.peek()
        if token.kind == "name":
            if token.value != variable:
                self.fail(f"the tangent must be a polynomial in {variable!r}", token)
            self.advance()
            degree = 1
            if self.peek().kind == "^":
                self.advance()
                degree = self.expect_int("an integer exponent")
            return coefficient, degree
        if not explicit_coefficient:
            self.fail("expected a tangent term")
        return coefficient, 0


def parse(text: str) -> Elaborated:
    """Parse an ideal/tower expression; errors carry caret positions."""
    return _Parser(text).parse()


# -- printers -----------------------------------------------------------------


def monomial_text(exponent) -> str:
    a, b = exponent
    if a == 0 and b == 0:
        return "1"
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return " ".join(parts)


def ideal_text(ideal: MonomialIdeal) -> str:
    """Canonical text form, generators by descending x-exponent."""
    return "(" + ", ".join(monomial_text(g) for g in reversed(ideal.generators)) + ")"


def factors_text(factors) -> str:
    """Canonical text of an n_ab factorization, e.g. n(1,2) * n(1,1) * n(2,1)^2."""

    def one(f: NabFactor) -> str:
        base = f"n({f.alpha},{f.beta})"
        return base if f.delta == 1 else f"{base}^{f.delta}"

    return " * ".join(one(f) for f in factors)


def tangent_text(tangent, variable: str) -> str:
    if not tangent:
        return "0"
    parts = []
    for i, c in enumerate(tangent):
        if c == 0:
            continue
        degree = i + 1
        var = variable if degree == 1 else f"{variable}^{degree}"
        magnitude = abs(c)
        body = var if magnitude == 1 else f"{magnitude}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def tower_text(tower: Tower) -> str:
    variable = "y" if tower.branch == "x" else "x"
    exps = ", ".join(str(e) for e in tower.exponents)
    return f"tower({tower.branch}; g = {tangent_text(tower.tangent, variable)}; exps = [{exps}])"


def product_text(product: TowerProduct) -> str:
    return " * ".join(tower_text(t) for t in product.towers)
