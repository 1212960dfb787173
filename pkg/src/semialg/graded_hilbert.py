"""Graded dimensions, partition counts, and truncated Hilbert series.

Everything is tabulated exactly up to a caller-chosen truncation order:
the denumerant p_{a,b}(n), the graded component dimensions of the weighted
two-variable polynomial ring, the semigroup ring, and the kernel ideal,
plus the rank-nullity and Hilbert-series identities connecting them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bivariate_algebra import Monomial2
from .gap_polynomials import IntPolynomial, gap_polynomial, verify_functional_equation
from .semigroup_core import build_table, validate_generators

SERIES_KINDS = (
    "full_ring_degree",
    "full_ring_frobenius",
    "semigroup_ring",
    "kernel",
    "univariate",
)


class TruncatedSeries:
    """Exact integer coefficients c_0..c_N of a formal power series mod q^{N+1}."""

    __slots__ = ("order", "coefficients")

    def __init__(self, order: int, coefficients):
        coeffs = list(coefficients)
        if len(coeffs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(coeffs)}")
        self.order = order
        self.coefficients = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, [0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [1] + [0] * order)

    @classmethod
    def geometric(cls, m: int, order: int) -> "TruncatedSeries":
        """1 / (1 - q^m) truncated: coefficient 1 at multiples of m."""
        if m < 1:
            raise ValueError("geometric step must be positive")
        return cls(order, [1 if n % m == 0 else 0 for n in range(order + 1)])

    @classmethod
    def from_polynomial(cls, f: IntPolynomial, order: int) -> "TruncatedSeries":
        return cls(order, [f.coefficient(n) for n in range(order + 1)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            n, [self.coefficients[i] + other.coefficients[i] for i in range(n + 1)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            n, [self.coefficients[i] - other.coefficients[i] for i in range(n + 1)]
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, ci in enumerate(self.coefficients[: n + 1]):
            if ci == 0:
                continue
            for j in range(n + 1 - i):
                cj = other.coefficients[j]
                if cj:
                    out[i + j] += ci * cj
        return TruncatedSeries(n, out)

    def shift(self, m: int) -> "TruncatedSeries":
        """Multiply by q^m (same truncation order)."""
        if m > self.order:
            return TruncatedSeries.zero(self.order)
        return TruncatedSeries(
            self.order, [0] * m + list(self.coefficients[: self.order + 1 - m])
        )

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coefficients):
            if n == 0:
                parts.append(str(c))
            elif n == 1:
                parts.append(f"{c}*q")
            else:
                parts.append(f"{c}*q^{n}")
        return " + ".join(parts) + f" + O(q^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order})"


@dataclass(frozen=True)
class GradedDims:
    """Component dimensions for the weighted grading by a*i + b*j, up to nmax.

    dim_full[n] counts weighted-degree-n monomials of the two-variable ring,
    dim_ring[n] is the 0/1 membership dimension of the semigroup ring, and
    dim_kernel[n] is the dimension of the degree-n slice of the kernel ideal.
    """

    a: int
    b: int
    nmax: int
    dim_full: tuple[int, ...]
    dim_ring: tuple[int, ...]
    dim_kernel: tuple[int, ...]

    def dimE(self, n: int) -> int:
        return self.dim_full[n]

    def dimR(self, n: int) -> int:
        return self.dim_ring[n]

    def dimK(self, n: int) -> int:
        return self.dim_kernel[n]


def partition_count(a: int, b: int, n: int) -> int:
    """Number of (i, j) in N_0^2 with a*i + b*j = n. No coprimality needed."""
    if a < 1 or b < 1:
        raise ValueError("parts must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(1 for i in range(n // a + 1) if (n - a * i) % b == 0)


def enumerate_basis(a: int, b: int, n: int) -> list[Monomial2]:
    """All monomials x^i y^j of weighted degree n, sorted by i."""
    if a < 1 or b < 1:
        raise ValueError("parts must be positive")
    return [
        Monomial2(i, (n - a * i) // b)
        for i in range(n // a + 1)
        if (n - a * i) % b == 0
    ]


def _require_admissible_pair(a: int, b: int) -> None:
    if a == b:
        raise ValueError(f"pair must be distinct, got a = b = {a}")
    if a < 2 or b < 2:
        raise ValueError("both pair members must be at least 2")
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd({a},{b}) = {math.gcd(a, b)} != 1")


def graded_dims(a: int, b: int, nmax: int) -> GradedDims:
    """Tabulate dim(E_n), dim(R_n), dim(K_n) for n = 0..nmax."""
    _require_admissible_pair(a, b)
    table = build_table(validate_generators([a, b]))
    ab = a * b
    dim_full = tuple(partition_count(a, b, n) for n in range(nmax + 1))
    dim_ring = tuple(1 if table.is_member(n) else 0 for n in range(nmax + 1))
    dim_kernel = tuple(
        0 if n < ab else partition_count(a, b, n - ab) for n in range(nmax + 1)
    )
    return GradedDims(a=a, b=b, nmax=nmax, dim_full=dim_full, dim_ring=dim_ring, dim_kernel=dim_kernel)


def rank_nullity_check(a: int, b: int, nmax: int) -> bool:
    """dim(E_n) == dim(R_n) + dim(K_n) for every n up to nmax."""
    dims = graded_dims(a, b, nmax)
    return all(
        dims.dim_full[n] == dims.dim_ring[n] + dims.dim_kernel[n]
        for n in range(nmax + 1)
    )


def surjectivity_witness(a: int, b: int, n: int) -> Monomial2:
    """A monomial x^i y^j with a*i + b*j = n, for n in the semigroup."""
    _require_admissible_pair(a, b)
    basis = enumerate_basis(a, b, n)
    if not basis:
        raise ValueError(f"{n} is a gap of the semigroup generated by {a} and {b}")
    return basis[0]


def hilbert_series(which: str, a: int | None, b: int | None, order: int) -> TruncatedSeries:
    """Truncated expansion of one of the five closed-form Hilbert series.

    `which` is one of SERIES_KINDS; the pair (a, b) is ignored for the
    univariate and degree-graded series.
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    if which == "univariate":
        return TruncatedSeries.geometric(1, order)
    if which == "full_ring_degree":
        g = TruncatedSeries.geometric(1, order)
        return g * g
    if which not in SERIES_KINDS:
        raise ValueError(f"unknown series kind {which!r}")
    if a is None or b is None:
        raise ValueError(f"series kind {which!r} needs the pair (a, b)")
    _require_admissible_pair(a, b)
    full = TruncatedSeries.geometric(a, order) * TruncatedSeries.geometric(b, order)
    if which == "full_ring_frobenius":
        return full
    if which == "kernel":
        return full.shift(a * b)
    # semigroup_ring: 1/(1-q) - f_A(q)
    f = gap_polynomial(validate_generators([a, b]))
    return TruncatedSeries.geometric(1, order) - TruncatedSeries.from_polynomial(f, order)


def euler_product_series(a: int, b: int, order: int) -> TruncatedSeries:
    """1 / ((1-q^a)(1-q^b)) truncated; no coprimality requirement."""
    if a < 1 or b < 1:
        raise ValueError("parts must be positive")
    return TruncatedSeries.geometric(a, order) * TruncatedSeries.geometric(b, order)


def series_identity_check(a: int, b: int, order: int) -> bool:
    """Full-ring series equals semigroup-ring series plus kernel series.

    Requires order >= ab + 1 so the gap polynomial is fully visible;
    also cross-checks the cleared-denominator polynomial identity.
    """
    _require_admissible_pair(a, b)
    if order < a * b + 1:
        raise ValueError(f"order must be at least ab + 1 = {a * b + 1}")
    full = hilbert_series("full_ring_frobenius", a, b, order)
    ring = hilbert_series("semigroup_ring", a, b, order)
    kernel = hilbert_series("kernel", a, b, order)
    if full != ring + kernel:
        return False
    return verify_functional_equation(a, b)


def series_to_json(s: TruncatedSeries) -> dict:
    return {"order": s.order, "coefficients": list(s.coefficients)}
