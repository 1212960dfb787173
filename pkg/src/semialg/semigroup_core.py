"""Numerical semigroups: membership tables, gaps, Frobenius number, genus.

All arithmetic is exact (Python ints). Every object is immutable after
construction and every function is pure, so everything here is safe to use
from multiple threads.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

DEFAULT_MAX_BOUND = 10**7


class NotNumericalSemigroupError(ValueError):
    """Raised when gcd(A) != 1, so S(A) is not a numerical semigroup."""

    def __init__(self, gcd_value: int):
        self.gcd = gcd_value
        super().__init__(f"gcd(A)={gcd_value}, not a numerical semigroup")


class BoundTooLargeError(ValueError):
    """Raised when a membership table would exceed the configured cell cap."""


def _max_bound() -> int:
    return int(os.environ.get("SEMIGROUP_MAX_BOUND", DEFAULT_MAX_BOUND))


@dataclass(frozen=True)
class GeneratorSet:
    """A validated finite set of positive integer generators, sorted ascending."""

    elements: tuple[int, ...]
    gcd: int

    @property
    def k(self) -> int:
        return len(self.elements)

    def require_coprime(self) -> None:
        if self.gcd != 1:
            raise NotNumericalSemigroupError(self.gcd)

    def __str__(self) -> str:
        return "{" + ", ".join(str(a) for a in self.elements) + "}"


@dataclass(frozen=True)
class Representation:
    """Nonnegative coefficients r_i with sum(a_i * r_i) equal to the represented n."""

    coefficients: tuple[int, ...]

    def value(self, generators: GeneratorSet) -> int:
        return sum(a * r for a, r in zip(generators.elements, self.coefficients))


@dataclass(frozen=True)
class SemigroupTable:
    """Membership bitmap of S(A) on 0..bound plus derived gap statistics.

    member[n] is True iff n is a nonnegative combination of the generators.
    frobenius is -1 when S(A) has no gaps (i.e. 1 is a generator).
    """

    generators: GeneratorSet
    bound: int
    member: tuple[bool, ...]
    frobenius: int
    genus: int
    gaps: tuple[int, ...]
    # predecessor generator index per representable cell, for witness backtrace;
    # extends past `bound` by max(A) cells so large n can be reduced into range
    _pred: tuple[int, ...] = field(repr=False, default=())

    def is_member(self, n: int) -> bool:
        if n < 0:
            return False
        if n <= self.bound:
            return self.member[n]
        return True


def validate_generators(raw: list[int]) -> GeneratorSet:
    """Sort, deduplicate and gcd-check a raw generator list.

    Accepts any positive integers; the caller inspects .gcd (or calls
    require_coprime) to decide whether S(A) is a numerical semigroup.
    """
    if not raw:
        raise ValueError("generator set must be nonempty")
    for a in raw:
        if a <= 0:
            raise ValueError(f"generators must be positive, got {a}")
    elements = tuple(sorted(set(raw)))
    return GeneratorSet(elements=elements, gcd=math.gcd(*elements))


def conductor_bound(A: GeneratorSet) -> int:
    """The explicit threshold (a_k - 1) * sum(a_1..a_{k-1}).

    Every n at or above this value has a nonnegative representation, so the
    Frobenius number is at most conductor_bound(A) - 1.
    """
    A.require_coprime()
    return (A.elements[-1] - 1) * sum(A.elements[:-1])


def build_table(A: GeneratorSet) -> SemigroupTable:
    """Forward-DP membership table of S(A) up to the conductor bound."""
    A.require_coprime()
    bound = conductor_bound(A)
    extended = bound + max(A.elements)
    if extended + 1 > _max_bound():
        raise BoundTooLargeError(
            f"table of {extended + 1} cells exceeds SEMIGROUP_MAX_BOUND={_max_bound()}"
        )

    member = [False] * (extended + 1)
    pred = [-1] * (extended + 1)
    member[0] = True
    for n in range(extended + 1):
        if not member[n]:
            continue
        for idx, a in enumerate(A.elements):
            if n + a <= extended and not member[n + a]:
                member[n + a] = True
                pred[n + a] = idx

    gaps = tuple(n for n in range(bound + 1) if not member[n])
    frobenius = gaps[-1] if gaps else -1
    return SemigroupTable(
        generators=A,
        bound=bound,
        member=tuple(member[: bound + 1]),
        frobenius=frobenius,
        genus=len(gaps),
        gaps=gaps,
        _pred=tuple(pred),
    )


def frobenius_number(A: GeneratorSet) -> int:
    """Largest integer not in S(A); -1 when S(A) is all of N_0."""
    return build_table(A).frobenius


def genus(A: GeneratorSet) -> int:
    """Number of gaps of S(A)."""
    return build_table(A).genus


def is_symmetric(A: GeneratorSet) -> bool:
    """True iff n not in S(A) implies F(A) - n in S(A).

    Gap-free semigroups are symmetric by vacuity.
    """
    table = build_table(A)
    if table.frobenius == -1:
        return True
    F = table.frobenius
    return all(table.member[n] != table.member[F - n] for n in range(F + 1))


def represent(n: int, A: GeneratorSet) -> Representation | None:
    """A nonnegative-coefficient representation of n over A, or None for gaps."""
    table = build_table(A)
    return represent_from_table(n, table)


def represent_from_table(n: int, table: SemigroupTable) -> Representation | None:
    """Like represent(), reusing an already-built table."""
    if n < 0:
        return None
    A = table.generators
    coeffs = [0] * A.k
    extended = len(table._pred) - 1
    if n > extended:
        # reduce by the smallest generator into the guaranteed-member range
        # [bound, bound + a_1); everything at or above bound is representable
        a1 = A.elements[0]
        steps = (n - table.bound) // a1
        coeffs[0] += steps
        n -= steps * a1
    if n > table.bound:
        pass  # still within the extended backtrace range
    elif not table.member[n]:
        return None
    while n > 0:
        idx = table._pred[n]
        coeffs[idx] += 1
        n -= A.elements[idx]
    return Representation(coefficients=tuple(coeffs))
