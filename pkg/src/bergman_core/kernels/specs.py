"""
Domain specifications and point handling.
"""
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from bergman_core.algebra.homogeneous import hartogs_base_polynomial, hartogs_normalization
from bergman_core.algebra.rationals import as_rational, format_rational
from bergman_core.core.domains import get_domain, validate_domain_params
from bergman_core.core.exceptions import ParameterOutOfRange, SchemaViolation


@dataclass(frozen=True)
class DomainSpec:
    """
    A model domain over the unit ball B^n, with optional target data.

    ``lam`` is the rescaling of the Bergman metric and ``N`` the dimension of
    the target ball; both are only needed by the Calabi and rigidity checks.
    """

    kind: str
    n: int
    m: int | None = None
    s: Fraction | None = None
    p: int | None = None
    q: int | None = None
    k: Fraction | None = None
    N: int | None = None
    lam: Fraction | float | None = field(default=None)

    def __post_init__(self):
        is_valid, errors = validate_domain_params(self.kind, self.params())
        if not is_valid:
            raise SchemaViolation("; ".join(errors), details={"errors": errors})

        for name in ("s", "k"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, as_rational(value, name))
        if self.lam is not None and not isinstance(self.lam, float):
            object.__setattr__(self, "lam", as_rational(self.lam, "lambda"))

        for name in get_domain(self.kind).integer_params:
            if int(getattr(self, name)) < 1:
                raise ParameterOutOfRange(
                    f"{name} must be at least 1.", details={name: getattr(self, name)}
                )
        if self.kind == "hartogs":
            if self.s <= Fraction(-1, self.n + 1):
                raise ParameterOutOfRange(
                    f"s must exceed -1/(n+1) = -1/{self.n + 1}.", details={"s": str(self.s)}
                )
            hartogs_normalization(hartogs_base_polynomial(self.n, self.s), self.m)
        if self.kind == "egg" and self.k <= 0:
            raise ParameterOutOfRange("k must be positive.", details={"k": str(self.k)})
        if self.lam is not None and self.lam <= 0:
            raise ParameterOutOfRange("lambda must be positive.", details={"lambda": str(self.lam)})
        if self.N is not None and self.N < self.dimension:
            raise ParameterOutOfRange(
                "Target dimension N must be at least the domain dimension.",
                details={"N": self.N, "dimension": self.dimension},
            )

    @classmethod
    def ball(cls, n: int, **target) -> "DomainSpec":
        return cls(kind="ball", n=n, **target)

    @classmethod
    def hartogs(cls, n: int, m: int, s, **target) -> "DomainSpec":
        return cls(kind="hartogs", n=n, m=m, s=s, **target)

    @classmethod
    def egg(cls, n: int, p: int, q: int, k, **target) -> "DomainSpec":
        return cls(kind="egg", n=n, p=p, q=q, k=k, **target)

    def params(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "s": self.s,
            "p": self.p,
            "q": self.q,
            "k": self.k,
            "lambda": self.lam,
            "N": self.N,
        }

    @property
    def blocks(self) -> tuple[int, ...]:
        """Dimensions of the coordinate groups: base, then fibres."""
        if self.kind == "ball":
            return (self.n,)
        if self.kind == "hartogs":
            return (self.n, self.m)
        return (self.n, self.p, self.q)

    @property
    def dimension(self) -> int:
        return sum(self.blocks)

    @property
    def genus(self) -> int:
        """Genus of the ball base."""
        return self.n + 1

    def split(self, point) -> tuple[np.ndarray, ...]:
        """Split a point of C^dimension into its coordinate groups."""
        vector = as_point(point)
        if vector.shape != (self.dimension,):
            raise SchemaViolation(
                f"Point must have {self.dimension} coordinates, got {vector.size}.",
                details={"expected": self.dimension, "given": int(vector.size)},
            )
        offsets = np.cumsum((0,) + self.blocks)
        return tuple(vector[a:b] for a, b in zip(offsets[:-1], offsets[1:]))

    def with_target(self, lam=None, N=None) -> "DomainSpec":
        data = self.params()
        data["lambda"] = lam if lam is not None else self.lam
        data["N"] = N if N is not None else self.N
        return DomainSpec.from_dict({"domain": self.kind, **data})

    def to_dict(self) -> dict:
        """Primitive representation; rationals become "a/b" strings, absent fields are dropped."""
        data = {"domain": self.kind}
        for key, value in self.params().items():
            if value is None:
                continue
            if isinstance(value, Fraction):
                value = format_rational(value)
            data[key] = value
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "DomainSpec":
        data = dict(data)
        kind = data.pop("domain")
        lam = data.pop("lambda", None)
        return cls(kind=kind, lam=lam, **{k: v for k, v in data.items() if v is not None})

    def __str__(self):
        inner = ", ".join(
            f"{key}={value}" for key, value in self.to_dict().items() if key != "domain"
        )
        return f"{self.kind}({inner})"


def as_point(point) -> np.ndarray:
    return np.atleast_1d(np.asarray(point, dtype=complex))


def hermitian_inner(z, w) -> complex:
    """<z, w> = sum z_i conj(w_i)."""
    return complex(np.vdot(as_point(w), as_point(z)))


def squared_norm(z) -> float:
    return float(np.real(np.vdot(as_point(z), as_point(z))))
