"""Sparse bivariate polynomials over exact rationals with lex monomial order.

Implements single-divisor lexicographic division, the monomial ring map
x -> t^a, y -> t^b, and two independent membership tests for its kernel
(the principal ideal generated by x^b - y^a).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, NamedTuple

from .gap_polynomials import IntPolynomial


class Monomial2(NamedTuple):
    """Monomial x^i y^j; tuple comparison is exactly lex order (i first)."""

    i: int
    j: int

    def divides(self, other: "Monomial2") -> bool:
        return self.i <= other.i and self.j <= other.j

    def __str__(self) -> str:
        parts = []
        if self.i:
            parts.append("x" if self.i == 1 else f"x^{self.i}")
        if self.j:
            parts.append("y" if self.j == 1 else f"y^{self.j}")
        return "*".join(parts) if parts else "1"


class BivariatePolynomial:
    """Finite map from monomials to nonzero Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial2, Fraction] | None = None):
        cleaned = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    cleaned[Monomial2(*m)] = c
        self.terms = cleaned

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def from_terms(cls, triples: Iterable[tuple[int, int, object]]) -> "BivariatePolynomial":
        terms: dict[Monomial2, Fraction] = {}
        for i, j, c in triples:
            m = Monomial2(i, j)
            terms[m] = terms.get(m, Fraction(0)) + Fraction(c)
        return cls(terms)

    @classmethod
    def binomial_xb_minus_ya(cls, a: int, b: int) -> "BivariatePolynomial":
        """The divisor x^b - y^a."""
        return cls.from_terms([(b, 0, 1), (0, a, -1)])

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return BivariatePolynomial(terms)

    def __sub__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) - c
        return BivariatePolynomial(terms)

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        terms: dict[Monomial2, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = Monomial2(m1.i + m2.i, m1.j + m2.j)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return BivariatePolynomial(terms)

    def scale(self, c) -> "BivariatePolynomial":
        return BivariatePolynomial({m: cf * Fraction(c) for m, cf in self.terms.items()})

    def term_shift(self, m: Monomial2, c: Fraction) -> "BivariatePolynomial":
        """Multiply by the single term c * x^m.i * y^m.j."""
        return BivariatePolynomial(
            {Monomial2(k.i + m.i, k.j + m.j): cf * c for k, cf in self.terms.items()}
        )

    def sorted_terms(self) -> list[tuple[Monomial2, Fraction]]:
        """Terms in lex-descending order (deterministic printing)."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        out = ""
        for m, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if m == Monomial2(0, 0):
                body = str(mag)
            elif mag == 1:
                body = str(m)
            else:
                body = f"{mag}*{m}"
            out += f" {sign} {body}" if out else (f"-{body}" if sign == "-" else body)
        return out

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self})"


class DivisionResult(NamedTuple):
    quotient: BivariatePolynomial
    remainder: BivariatePolynomial


def leading_monomial(f: BivariatePolynomial) -> Monomial2:
    """Lex-largest monomial with nonzero coefficient."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading monomial")
    return max(f.terms)


def divide(g: BivariatePolynomial, f: BivariatePolynomial) -> DivisionResult:
    """Single-divisor lex reduction: g = quotient*f + remainder.

    No monomial of the remainder is divisible by the leading monomial of f.
    Each step retires the current lex-largest unprocessed term, so the loop
    terminates.
    """
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm_f = leading_monomial(f)
    lc_f = f.terms[lm_f]

    work = g
    quotient: dict[Monomial2, Fraction] = {}
    remainder: dict[Monomial2, Fraction] = {}
    while not work.is_zero():
        lm = leading_monomial(work)
        c = work.terms[lm]
        if lm_f.divides(lm):
            shift = Monomial2(lm.i - lm_f.i, lm.j - lm_f.j)
            factor = c / lc_f
            quotient[shift] = quotient.get(shift, Fraction(0)) + factor
            work = work - f.term_shift(shift, factor)
        else:
            remainder[lm] = c
            work = work - BivariatePolynomial({lm: c})
    return DivisionResult(BivariatePolynomial(quotient), BivariatePolynomial(remainder))


def phi_evaluate(g: BivariatePolynomial, a: int, b: int) -> IntPolynomial:
    """Image of g under x -> t^a, y -> t^b, i.e. g(t^a, t^b) in E[t]."""
    if a < 1 or b < 1:
        raise ValueError("exponent weights must be positive")
    coeffs: dict[int, Fraction] = {}
    for m, c in g.terms.items():
        n = a * m.i + b * m.j
        coeffs[n] = coeffs.get(n, Fraction(0)) + c
    if not coeffs:
        return IntPolynomial.zero()
    dense = [Fraction(0)] * (max(coeffs) + 1)
    for n, c in coeffs.items():
        dense[n] = c
    return IntPolynomial(dense)


def _check_pair(a: int, b: int) -> None:
    if a == b:
        raise ValueError(f"weights must be distinct, got a = b = {a}")
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd({a},{b}) = {math.gcd(a, b)} != 1")


def in_kernel(g: BivariatePolynomial, a: int, b: int, method: str = "evaluate") -> bool:
    """Membership in the kernel ideal, by direct evaluation or by division.

    The two methods agree on every input: the kernel is exactly the
    principal ideal of x^b - y^a.
    """
    _check_pair(a, b)
    if method == "evaluate":
        return phi_evaluate(g, a, b).is_zero()
    if method == "divide":
        return divide(g, BivariatePolynomial.binomial_xb_minus_ya(a, b)).remainder.is_zero()
    raise ValueError(f"unknown method {method!r} (expected 'evaluate' or 'divide')")


def distinct_exponent_check(a: int, b: int, j_cap: int | None = None) -> bool:
    """Exhaustively verify (i,j) -> a*i + b*j is injective on {0..b-1} x {0..j_cap}.

    Default cap keeps a*i + b*j <= 3ab, covering everything the identity
    checks can produce at desk scale.
    """
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd({a},{b}) = {math.gcd(a, b)} != 1")
    if j_cap is None:
        j_cap = 3 * a
    seen: set[int] = set()
    for i in range(b):
        for j in range(j_cap + 1):
            n = a * i + b * j
            if n in seen:
                return False
            seen.add(n)
    return True


class ParseError(ValueError):
    """Bivariate grammar violation; .column is the 1-based offending position."""

    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"{message} (column {column})")


_TERM_RE = re.compile(
    r"""
    (?P<coeff>\d+(?:/\d+)?)? (?:(?<=\d)\*)?   # optional rational coefficient
    (?:x(?:\^(?P<xi>\d+))?)? \*?              # optional x part
    (?:y(?:\^(?P<yj>\d+))?)?                  # optional y part
    """,
    re.VERBOSE,
)


def parse_bivariate(text: str) -> BivariatePolynomial:
    """Parse terms like `3*x^2*y - 1/2*y^4 + 7` in any order."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial expression", 1)
    if s == "0":
        return BivariatePolynomial.zero()
    triples = []
    pos = 0
    sign = 1
    expect_term = True
    while pos < len(s):
        ch = s[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "+-":
            if expect_term and ch == "+":
                raise ParseError("unexpected '+'", pos + 1)
            sign = -sign if ch == "-" else sign
            pos += 1
            expect_term = True
            continue
        if not expect_term:
            raise ParseError(f"expected '+' or '-' before {ch!r}", pos + 1)
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse term starting at {ch!r}", pos + 1)
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        xi = int(m.group("xi")) if m.group("xi") else (1 if "x" in s[pos : m.end()] else 0)
        yj = int(m.group("yj")) if m.group("yj") else (1 if "y" in s[pos : m.end()] else 0)
        triples.append((xi, yj, sign * coeff))
        pos = m.end()
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError("dangling operator at end of expression", len(s))
    return BivariatePolynomial.from_terms(triples)


def bivariate_to_json(g: BivariatePolynomial) -> list[list]:
    """JSON form: [i, j, coefficient] triples in lex-descending order."""
    out = []
    for m, c in g.sorted_terms():
        out.append([m.i, m.j, int(c) if c.denominator == 1 else str(c)])
    return out
