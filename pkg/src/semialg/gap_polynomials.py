"""Gap generating polynomials and the two-generator functional equation.

The central objects are f_A(q), whose monomials enumerate the gaps of S(A),
its reciprocal, and the complementary membership polynomial g_A(q). All
coefficient arithmetic is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .semigroup_core import GeneratorSet, build_table, validate_generators

NEG_INF = float("-inf")  # degree sentinel for the zero polynomial


class IntPolynomial:
    """Dense univariate polynomial with exact coefficients.

    Coefficients are ints for everything built from gap data; exact
    Fractions are also accepted (the ring-map images in the bivariate
    module live here too). No floats, ever.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        for c in coeffs:
            if isinstance(c, float):
                raise TypeError("coefficients must be exact (int or Fraction)")
        self.coefficients = tuple(coeffs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient=1) -> "IntPolynomial":
        return cls((0,) * exponent + (coefficient,))

    @property
    def degree(self):
        """Degree, or the negative-infinity sentinel for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else NEG_INF

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, n: int):
        return self.coefficients[n] if 0 <= n < len(self.coefficients) else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(
            self.coefficient(i) + other.coefficient(i) for i in range(n)
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(
            self.coefficient(i) - other.coefficient(i) for i in range(n)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, ci in enumerate(self.coefficients):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coefficients):
                out[i + j] += ci * cj
        return IntPolynomial(out)

    def __call__(self, x):
        """Evaluate at an exact point by Horner's rule."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def terms(self) -> list[tuple[int, object]]:
        """Nonzero (exponent, coefficient) pairs, ascending."""
        return [(i, c) for i, c in enumerate(self.coefficients) if c != 0]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in self.terms():
            if i == 0:
                parts.append(str(c))
            else:
                q = "q" if i == 1 else f"q^{i}"
                parts.append(q if c == 1 else f"{c}*{q}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"


def _coprime_pair(a: int, b: int) -> GeneratorSet:
    if a == b:
        raise ValueError(f"generators must be distinct, got a = b = {a}")
    if a < 2 or b < 2:
        raise ValueError("both generators must be at least 2 (f_A would be zero)")
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd({a},{b}) = {math.gcd(a, b)} != 1")
    return validate_generators([a, b])


def gap_polynomial(A: GeneratorSet) -> IntPolynomial:
    """f_A(q): coefficient 1 at each gap of S(A), zero elsewhere."""
    table = build_table(A)
    if not table.gaps:
        return IntPolynomial.zero()
    coeffs = [0] * (table.frobenius + 1)
    for n in table.gaps:
        coeffs[n] = 1
    return IntPolynomial(coeffs)


def reciprocal(f: IntPolynomial) -> IntPolynomial:
    """Coefficient reversal q^d * f(1/q) for f of degree d."""
    if f.is_zero():
        raise ValueError("reciprocal of the zero polynomial is undefined")
    return IntPolynomial(reversed(f.coefficients))


def g_polynomial(A: GeneratorSet) -> IntPolynomial:
    """g_A(q) = (1 + q + ... + q^F) - f_A(q): indicator of members up to F(A)."""
    table = build_table(A)
    if not table.gaps:
        raise ValueError("g_A is undefined for gap-free semigroups (no Frobenius degree)")
    return IntPolynomial(1 if table.member[n] else 0 for n in range(table.frobenius + 1))


def verify_functional_equation(a: int, b: int) -> bool:
    """Check (q^a - 1)(q^b - 1)((q-1) f_A + 1) == (q-1)(q^ab - 1) exactly."""
    A = _coprime_pair(a, b)
    f = gap_polynomial(A)
    q_minus_1 = IntPolynomial((-1, 1))
    lhs = (
        (IntPolynomial.monomial(a) - IntPolynomial.one())
        * (IntPolynomial.monomial(b) - IntPolynomial.one())
        * (q_minus_1 * f + IntPolynomial.one())
    )
    rhs = q_minus_1 * (IntPolynomial.monomial(a * b) - IntPolynomial.one())
    return lhs == rhs


def frobenius_from_degree(a: int, b: int) -> int:
    """deg f_A for A = {a,b}; the degree argument forces this to be ab - a - b."""
    A = _coprime_pair(a, b)
    d = gap_polynomial(A).degree
    assert d == a * b - a - b, f"degree {d} != {a * b - a - b} for ({a},{b})"
    return d


def reciprocal_duality(a: int, b: int) -> bool:
    """Check that reciprocal(f_A) equals g_A and the reciprocal identity holds."""
    A = _coprime_pair(a, b)
    f = gap_polynomial(A)
    f_hat = reciprocal(f)
    if f_hat != g_polynomial(A):
        return False
    q_minus_1 = IntPolynomial((-1, 1))
    lhs = (
        (IntPolynomial.monomial(a) - IntPolynomial.one())
        * (IntPolynomial.monomial(b) - IntPolynomial.one())
        * (IntPolynomial.monomial(a * b - a - b + 1) - q_minus_1 * f_hat)
    )
    rhs = q_minus_1 * (IntPolynomial.monomial(a * b) - IntPolynomial.one())
    return lhs == rhs


def epsilon_symmetry_violations(A: GeneratorSet) -> list[int]:
    """All n in 0..F(A) where the membership indicators of n and F(A)-n agree.

    Empty exactly when S(A) is symmetric.
    """
    table = build_table(A)
    if not table.gaps:
        raise ValueError("symmetry indicators need at least one gap")
    F = table.frobenius
    return [n for n in range(F + 1) if table.member[n] == table.member[F - n]]


def poly_to_json(f: IntPolynomial) -> list[list]:
    """JSON form: [exponent, coefficient] pairs, ascending exponents."""
    out = []
    for i, c in f.terms():
        if isinstance(c, Fraction) and c.denominator == 1:
            c = int(c)
        out.append([i, c if isinstance(c, int) else str(c)])
    return out
