"""Generators and algebra kinds.

The algebras handled by the kernel are all presented on the generators
x_1..x_n, d_1..d_n and (except for the plain Weyl algebra) a central-degree
candidate z.  A :class:`Generator` names one of them; an
:class:`AlgebraKind` names the ambient algebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IllegalGenerator, IndexOutOfRange


class AlgebraKind(enum.Enum):
    """Which algebra an element lives in.

    A  -- the Weyl algebra on n pairs (d_i x_i - x_i d_i = 1, no z)
    B  -- its homogenization (d_i x_i - x_i d_i = z^2, z central)
    C  -- the commutative polynomial algebra on x_1..x_n, d_1..d_n, z
    B! -- the Koszul dual of B (finite dimensional)
    C! -- the Koszul dual of C (exterior algebra on 2n+1 generators)
    """

    A = "A"
    B = "B"
    C = "C"
    B_SHRIEK = "B!"
    C_SHRIEK = "C!"

    @property
    def has_z(self) -> bool:
        return self is not AlgebraKind.A

    @property
    def is_shriek(self) -> bool:
        return self in (AlgebraKind.B_SHRIEK, AlgebraKind.C_SHRIEK)

    @classmethod
    def from_string(cls, text: str) -> "AlgebraKind":
        try:
            return cls(text.upper().replace(" ", ""))
        except ValueError:
            raise ValueError(
                f"unknown algebra kind {text!r}; expected one of A, B, C, B!, C!"
            ) from None


@dataclass(frozen=True)
class Generator:
    """One generator: x_i, d_i, or z.  Indices are 1-based; z carries index 0."""

    family: str  # 'x', 'd' or 'z'
    index: int = 0

    def __post_init__(self):
        if self.family not in ("x", "d", "z"):
            raise ValueError(f"bad generator family {self.family!r}")
        if self.family == "z" and self.index != 0:
            raise ValueError("z carries no index")
        if self.family != "z" and self.index < 1:
            raise ValueError("x/d indices are 1-based")

    @staticmethod
    def x(i: int) -> "Generator":
        return Generator("x", i)

    @staticmethod
    def d(i: int) -> "Generator":
        return Generator("d", i)

    @staticmethod
    def z() -> "Generator":
        return Generator("z")

    def check(self, n: int, kind: AlgebraKind) -> None:
        """Validate against a pair count and target algebra."""
        if self.family == "z":
            if not kind.has_z:
                raise IllegalGenerator(
                    f"z is not a generator of the algebra {kind.value}"
                )
        elif self.index > n:
            raise IndexOutOfRange(
                f"generator {self} has index {self.index} > n = {n}"
            )

    def rank(self, n: int) -> int:
        """Position in the canonical reading order z < x_1 < .. < x_n < d_1 < .. < d_n."""
        if self.family == "z":
            return 0
        if self.family == "x":
            return self.index
        return n + self.index

    def __str__(self) -> str:
        return "z" if self.family == "z" else f"{self.family}{self.index}"


def generator_of_rank(r: int, n: int) -> Generator:
    """Inverse of :meth:`Generator.rank`."""
    if r == 0:
        return Generator.z()
    if r <= n:
        return Generator.x(r)
    return Generator.d(r - n)


Word = tuple[Generator, ...]


@dataclass(frozen=True)
class FreeExpression:
    """A raw sum of coefficient-word terms in the free algebra.

    No normalization is implied: words may repeat generators, terms may
    repeat words, and zero coefficients are allowed.  ``n`` records the
    pair count the expression was parsed against.
    """

    n: int
    terms: tuple[tuple[Fraction, Word], ...]

    @staticmethod
    def from_terms(n: int, terms: Sequence[tuple[Fraction, Sequence[Generator]]]) -> "FreeExpression":
        return FreeExpression(n, tuple((Fraction(c), tuple(w)) for c, w in terms))

    def check(self, kind: AlgebraKind) -> None:
        for _, word in self.terms:
            for g in word:
                g.check(self.n, kind)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, w in self.terms:
            word = "*".join(str(g) for g in w) if w else "1"
            parts.append(f"{c}*{word}")
        return " + ".join(parts)
