"""
Invariants of the base domain and the polynomials built from them.

Homogeneous base data (rank and per-block p, q, b) determine the Hartogs
polynomial b(k); symmetric data (rank, a, b) determine chi and the egg
coefficients b_j. Only the ball is evaluated end to end, but any admissible
invariants are accepted for the coefficient algebra.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from bergman_core.core.exceptions import BasisInconsistency, ParameterOutOfRange

from .polynomials import LinearFactor, RationalPolynomial, to_rising_factorial_basis
from .rationals import as_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockInvariants:
    p: int
    q: int
    b: int


@dataclass(frozen=True)
class HomogeneousBaseData:
    """
    Holomorphic invariants of a bounded homogeneous domain.

    Attributes:
        rank: Number of blocks r
        blocks: Invariants {p_k, q_k, b_k} for k = 1..r
    """

    rank: int
    blocks: tuple[BlockInvariants, ...]

    def __post_init__(self):
        if self.rank < 1 or len(self.blocks) != self.rank:
            raise ParameterOutOfRange(
                "Base data needs one block of invariants per rank.",
                details={"rank": self.rank, "blocks": len(self.blocks)},
            )
        if any(min(block.p, block.q, block.b) < 0 for block in self.blocks):
            raise ParameterOutOfRange("Block invariants must be natural numbers.")

    @classmethod
    def ball(cls, n: int) -> "HomogeneousBaseData":
        """Unit ball B^n: r = 1, p = q = 0, b = n - 1."""
        if n < 1:
            raise ParameterOutOfRange("Ball dimension must be at least 1.", details={"n": n})
        return cls(rank=1, blocks=(BlockInvariants(p=0, q=0, b=n - 1),))

    @property
    def exponents(self) -> tuple[Fraction, ...]:
        """a_{ki} = (i + q_k/2) / (p_k + q_k + b_k + 2) for 1 <= i <= 1 + p_k + b_k."""
        values = []
        for block in self.blocks:
            denominator = block.p + block.q + block.b + 2
            for i in range(1, 2 + block.p + block.b):
                values.append(Fraction(2 * i + block.q, 2 * denominator))
        return tuple(values)

    @property
    def c_omega(self) -> Fraction:
        return min(self.exponents)


@dataclass(frozen=True)
class SymmetricBaseData:
    """Rank and multiplicities (a, b) of an irreducible bounded symmetric domain."""

    rank: int
    a: int
    b: int

    @classmethod
    def ball(cls, n: int) -> "SymmetricBaseData":
        if n < 1:
            raise ParameterOutOfRange("Ball dimension must be at least 1.", details={"n": n})
        return cls(rank=1, a=2, b=n - 1)

    @property
    def genus(self) -> int:
        return 2 + self.a * (self.rank - 1) + self.b

    @property
    def dimension(self) -> int:
        return self.rank + self.a * self.rank * (self.rank - 1) // 2 + self.rank * self.b


def hartogs_base_polynomial(base, s) -> RationalPolynomial:
    """
    b(k) = F(sk) = prod_{k,i} (1 + s k / a_{ki}) in factored and expanded form.

    ``base`` is either a :class:`HomogeneousBaseData` or the ball dimension n.
    """
    if isinstance(base, int):
        base = HomogeneousBaseData.ball(base)
    s = as_rational(s, "s")
    if s <= -base.c_omega:
        raise ParameterOutOfRange(
            f"s must exceed -C_Omega = {-base.c_omega}.",
            details={"s": str(s), "c_omega": str(base.c_omega)},
        )
    factors = [LinearFactor(1, s / a) for a in base.exponents]
    return RationalPolynomial.from_factors(factors)


def hartogs_normalization(polynomial: RationalPolynomial, m: int) -> Fraction:
    """
    S = sum_j c(s, j) (j+m)! = m! b(m), i.e. pi^m K(0, 0) / K_base(0, 0)^(ms+1).

    S must be positive; for negative s and large fibre dimension it is not.
    """
    S = math.factorial(m) * polynomial(Fraction(m))
    if S <= 0:
        raise ParameterOutOfRange(
            "Kernel normalization S = m! b(m) must be positive.",
            details={"m": m, "S": str(S)},
        )
    return S


def first_nonpositive_term(polynomial: RationalPolynomial, m: int) -> int | None:
    """
    Smallest k >= 0 with b(k+m) <= 0, or None when there is none.

    (k+1)_m b(k+m) is the coefficient of t^k in the Hartogs kernel sum. Past
    the largest real root b keeps its sign, so finitely many k are checked.
    """
    last = max((root for root in polynomial.roots() if root >= m), default=Fraction(m))
    for x in range(m, math.floor(last) + 2):
        if polynomial(Fraction(x)) <= 0:
            return x - m
    return None


def chi_polynomial(r: int, a: int, b: int) -> RationalPolynomial:
    """
    chi(s) = prod_{j=1}^{r} (s + 1 + (j-1)a/2)_{1 + b + (r-j)a}, as a product of
    monic linear factors.
    """
    if r < 1 or a < 0 or b < 0:
        raise ParameterOutOfRange("chi needs r >= 1 and natural a, b.")
    factors = []
    for j in range(1, r + 1):
        start = 1 + Fraction((j - 1) * a, 2)
        length = 1 + b + (r - j) * a
        factors.extend(LinearFactor(start + t, 1) for t in range(length))
    return RationalPolynomial.from_factors(factors)


def egg_bj(chi: RationalPolynomial, n: int) -> tuple[Fraction, ...]:
    """
    Coordinates b_1..b_{n+2} of h(h-1)chi(h) in the basis (h+1)_j.

    The coordinate on (h+1)_0 must vanish since the left side vanishes at h = 0
    and h = 1; a nonzero value means chi was malformed.
    """
    if chi.degree != n:
        raise ParameterOutOfRange(
            "chi must have degree n.", details={"degree": chi.degree, "n": n}
        )
    h = RationalPolynomial.variable()
    coordinates = to_rising_factorial_basis(h * (h - 1) * chi)
    if coordinates[0] != 0:
        raise BasisInconsistency(
            "Constant rising-factorial coordinate of h(h-1)chi(h) is nonzero.",
            details={"c0": str(coordinates[0])},
        )
    logger.debug("Computed egg coefficients", extra={"n": n, "bj": [str(c) for c in coordinates]})
    return coordinates[1:]
