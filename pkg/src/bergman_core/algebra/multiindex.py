"""
Multi-indices over the fibre variables and their graded-lexicographic enumeration.
"""
import math
from collections.abc import Iterator

from .rationals import factorial_ratio


class MultiIndex(tuple):
    """A tuple of naturals indexing monomials xi^a."""

    def __new__(cls, entries=()):
        entries = tuple(int(e) for e in entries)
        if any(e < 0 for e in entries):
            raise ValueError("Multi-index entries must be non-negative.")
        return super().__new__(cls, entries)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def factorial(self) -> int:
        return math.prod(math.factorial(e) for e in self)

    @property
    def multinomial(self) -> int:
        """|a|! / a!"""
        return factorial_ratio(self.degree, self)

    def __repr__(self):
        return f"MultiIndex{tuple(self)}"


def compositions(total: int, parts: int) -> Iterator[MultiIndex]:
    """
    All multi-indices with ``parts`` entries summing to ``total``, in
    decreasing lexicographic order: (2, 0), (1, 1), (0, 2).
    """
    if parts == 1:
        yield MultiIndex((total,))
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield MultiIndex((first, *rest))


def lex_multiindices(fiber_dim: int, max_degree: int) -> list[MultiIndex]:
    """
    Multi-indices of degree at most ``max_degree`` in graded-lexicographic order.

    Total degree comes first; within one degree, larger leading entries come
    first. The list starts at the zero index.
    """
    if fiber_dim < 1:
        raise ValueError("fiber_dim must be at least 1.")
    return [
        index for degree in range(max_degree + 1) for index in compositions(degree, fiber_dim)
    ]


def multiindex_count(fiber_dim: int, max_degree: int) -> int:
    return math.comb(fiber_dim + max_degree, fiber_dim)
