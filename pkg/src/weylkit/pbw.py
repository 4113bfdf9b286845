"""Exact arithmetic in the homogenized Weyl algebra and its relatives.

Three algebras share one engine, selected by :class:`AlgebraKind`:

* ``B`` -- generators z, x_1..x_n, d_1..d_n with d_i x_i = x_i d_i + z^2,
  all other pairs commuting, z central.  Graded, all generators degree 1.
* ``A`` -- the Weyl algebra: same but d_i x_i = x_i d_i + 1 and no z.
* ``C`` -- the commutative polynomial algebra on all 2n+1 generators.

Every element has a unique normal form as a rational combination of
ordered monomials z^i x^P d^Q.  ``normal_form`` reaches it by literal
term rewriting on free words (the rule set below); ``multiply`` uses the
closed-form exchange identity

    d_i^q x_i^r = sum_k k! C(q,k) C(r,k) c^k x_i^(r-k) d_i^(q-k)

with c = z^2 resp. 1, which the rewriting rules generate.  The two routes
are checked against each other in the test suite.

Rewriting rules (applied to adjacent generator pairs):

    d_j x_i -> x_i d_j            (i != j)
    d_i x_i -> x_i d_i + z^2      (kind B;  + 1 for kind A)
    x_j x_i -> x_i x_j            (j > i)
    d_j d_i -> d_i d_j            (j > i)
    g z     -> z g                (every generator g)

Kind C sorts all pairs commutatively.  The default strategy is leftmost
reduction with a worklist; passing an ``rng`` picks redexes at random,
which the confluence tests exercise.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import (
    IllegalGenerator,
    KindMismatch,
    NotDivisible,
    ZeroElement,
)
from .generators import AlgebraKind, FreeExpression, Generator
from . import linalg

Rational = Fraction | int


@dataclass(frozen=True)
class PBWMonomial:
    """One basis monomial z^zexp x^xexps d^dexps."""

    zexp: int
    xexps: tuple[int, ...]
    dexps: tuple[int, ...]

    @property
    def degree(self) -> int:
        """Graded degree: every generator counts 1."""
        return self.zexp + sum(self.xexps) + sum(self.dexps)

    @property
    def partial(self) -> int:
        """The d-filtration degree: total x,d exponent; z counts 0."""
        return sum(self.xexps) + sum(self.dexps)

    def sort_key(self):
        # Basis-listing order: ascending degree, then ascending z exponent
        # (so within a homogeneous degree the terms of highest partial
        # degree come first, the way x1^2*d1 + 2*z^2*x1 is normally
        # written), then leading x- and d-exponents first.
        return (
            self.degree,
            self.zexp,
            tuple(-e for e in self.xexps),
            tuple(-e for e in self.dexps),
        )

    def term_key(self):
        # Term order inside an element: leading (highest-degree) terms
        # first, so x1*d1 + 1 rather than 1 + x1*d1; ties break as in
        # sort_key.
        return (
            -self.degree,
            self.zexp,
            tuple(-e for e in self.xexps),
            tuple(-e for e in self.dexps),
        )

    def __str__(self) -> str:
        parts = []
        if self.zexp == 1:
            parts.append("z")
        elif self.zexp > 1:
            parts.append(f"z^{self.zexp}")
        for fam, exps in (("x", self.xexps), ("d", self.dexps)):
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    parts.append(f"{fam}{i}")
                elif e > 1:
                    parts.append(f"{fam}{i}^{e}")
        return "*".join(parts) if parts else "1"


def _unit_monomial(n: int) -> PBWMonomial:
    return PBWMonomial(0, (0,) * n, (0,) * n)


class AlgebraElement:
    """A canonical element: sparse map from PBW monomials to nonzero rationals.

    Instances are immutable; all arithmetic returns fresh elements.  Two
    elements are equal iff kind, n and the coefficient maps agree.
    """

    __slots__ = ("kind", "n", "coeffs")

    def __init__(self, kind: AlgebraKind, n: int, coeffs: dict[PBWMonomial, Fraction] | None = None):
        if kind not in (AlgebraKind.A, AlgebraKind.B, AlgebraKind.C):
            raise KindMismatch(f"PBW engine handles kinds A, B, C; got {kind.value}")
        clean: dict[PBWMonomial, Fraction] = {}
        for m, c in (coeffs or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if len(m.xexps) != n or len(m.dexps) != n:
                raise KindMismatch(f"monomial {m} has wrong arity for n={n}")
            if kind is AlgebraKind.A and m.zexp != 0:
                raise IllegalGenerator("z exponent in a Weyl-algebra element")
            clean[m] = c
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero(kind: AlgebraKind, n: int) -> "AlgebraElement":
        return AlgebraElement(kind, n, {})

    @staticmethod
    def one(kind: AlgebraKind, n: int) -> "AlgebraElement":
        return AlgebraElement(kind, n, {_unit_monomial(n): Fraction(1)})

    @staticmethod
    def monomial(kind: AlgebraKind, n: int, m: PBWMonomial, coeff: Rational = 1) -> "AlgebraElement":
        return AlgebraElement(kind, n, {m: Fraction(coeff)})

    @staticmethod
    def generator(kind: AlgebraKind, n: int, g: Generator) -> "AlgebraElement":
        g.check(n, kind)
        xe = [0] * n
        de = [0] * n
        ze = 0
        if g.family == "x":
            xe[g.index - 1] = 1
        elif g.family == "d":
            de[g.index - 1] = 1
        else:
            ze = 1
        return AlgebraElement(kind, n, {PBWMonomial(ze, tuple(xe), tuple(de)): Fraction(1)})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[PBWMonomial, Fraction]]:
        """Terms in canonical order (leading terms first)."""
        return sorted(self.coeffs.items(), key=lambda mc: mc[0].term_key())

    def is_homogeneous(self) -> bool:
        degs = {m.degree for m in self.coeffs}
        return len(degs) <= 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.kind is other.kind
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if self.kind is not other.kind or self.n != other.n:
            raise KindMismatch(
                f"cannot combine {self.kind.value}(n={self.n}) with "
                f"{other.kind.value}(n={other.n})"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return AlgebraElement(self.kind, self.n, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.kind, self.n, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scaled(self, c: Rational) -> "AlgebraElement":
        c = Fraction(c)
        if c == 0:
            return AlgebraElement.zero(self.kind, self.n)
        return AlgebraElement(self.kind, self.n, {m: c * v for m, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = AlgebraElement.one(self.kind, self.n)
        for _ in range(k):
            out = multiply(out, self)
        return out

    def __str__(self) -> str:
        from .expressions import render

        return render(self, "text")

    def __repr__(self) -> str:
        return f"<{self.kind.value}(n={self.n}) {self}>"


# -- the rewriting kernel ----------------------------------------------------
#
# Words are tuples of generator ranks: z -> 0, x_i -> i, d_i -> n+i, so a
# word is canonical iff its ranks are nondecreasing.

def _word_ranks(word: Sequence[Generator], n: int) -> tuple[int, ...]:
    return tuple(g.rank(n) for g in word)


def _redex_positions(ranks: tuple[int, ...]) -> list[int]:
    return [i for i in range(len(ranks) - 1) if ranks[i] > ranks[i + 1]]


def _leftmost_redex(ranks: tuple[int, ...]) -> int | None:
    for i in range(len(ranks) - 1):
        if ranks[i] > ranks[i + 1]:
            return i
    return None


def _ranks_to_monomial(ranks: tuple[int, ...], n: int) -> PBWMonomial:
    ze = 0
    xe = [0] * n
    de = [0] * n
    for r in ranks:
        if r == 0:
            ze += 1
        elif r <= n:
            xe[r - 1] += 1
        else:
            de[r - n - 1] += 1
    return PBWMonomial(ze, tuple(xe), tuple(de))


def _reduce_rank_words(
    terms: dict[tuple[int, ...], Fraction],
    kind: AlgebraKind,
    n: int,
    rng: random.Random | None = None,
) -> dict[PBWMonomial, Fraction]:
    """Rewrite coefficient-carrying rank words to the canonical monomial map.

    Terminates for any redex order: each step strictly decreases the pair
    (d-before-x inversions, other misordered pairs) of every produced word.
    """
    out: dict[PBWMonomial, Fraction] = {}
    pending = dict(terms)
    while pending:
        ranks, coeff = pending.popitem()
        if coeff == 0:
            continue
        if rng is None:
            pos = _leftmost_redex(ranks)
        else:
            redexes = _redex_positions(ranks)
            pos = rng.choice(redexes) if redexes else None
        if pos is None:
            m = _ranks_to_monomial(ranks, n)
            s = out.get(m, Fraction(0)) + coeff
            if s:
                out[m] = s
            else:
                out.pop(m, None)
            continue
        a, b = ranks[pos], ranks[pos + 1]
        swapped = ranks[:pos] + (b, a) + ranks[pos + 2 :]
        pending[swapped] = pending.get(swapped, Fraction(0)) + coeff
        if kind is not AlgebraKind.C and a > n and a - n == b:
            # d_i x_i: correction term z^2 (kind B) or 1 (kind A)
            corr = ranks[:pos] + ((0, 0) if kind is AlgebraKind.B else ()) + ranks[pos + 2 :]
            pending[corr] = pending.get(corr, Fraction(0)) + coeff
    return out


def normal_form(
    expr: FreeExpression,
    kind: AlgebraKind,
    rng: random.Random | None = None,
) -> AlgebraElement:
    """Reduce a free expression to its unique PBW-canonical element.

    >>> from weylkit.expressions import parse
    >>> str(normal_form(parse("d1*x1", 1, AlgebraKind.B), AlgebraKind.B))
    'x1*d1 + z^2'
    """
    expr.check(kind)
    n = expr.n
    terms: dict[tuple[int, ...], Fraction] = {}
    for c, word in expr.terms:
        ranks = _word_ranks(word, n)
        terms[ranks] = terms.get(ranks, Fraction(0)) + c
    return AlgebraElement(kind, n, _reduce_rank_words(terms, kind, n, rng))


def word_normal_form(
    word: Sequence[Generator],
    kind: AlgebraKind,
    n: int,
    rng: random.Random | None = None,
) -> AlgebraElement:
    """Normal form of a single free word."""
    return normal_form(FreeExpression.from_terms(n, [(Fraction(1), word)]), kind, rng)


# -- closed-form multiplication ---------------------------------------------

def _mul_monomials(m1: PBWMonomial, m2: PBWMonomial, kind: AlgebraKind, n: int) -> list[tuple[PBWMonomial, int]]:
    if kind is AlgebraKind.C:
        return [
            (
                PBWMonomial(
                    m1.zexp + m2.zexp,
                    tuple(a + b for a, b in zip(m1.xexps, m2.xexps)),
                    tuple(a + b for a, b in zip(m1.dexps, m2.dexps)),
                ),
                1,
            )
        ]
    q1 = m1.dexps
    p2 = m2.xexps
    cross = [i for i in range(n) if q1[i] and p2[i]]
    base_z = m1.zexp + m2.zexp
    if not cross:
        return [
            (
                PBWMonomial(
                    base_z,
                    tuple(a + b for a, b in zip(m1.xexps, p2)),
                    tuple(a + b for a, b in zip(q1, m2.dexps)),
                ),
                1,
            )
        ]
    out = []
    for ks in itertools.product(*(range(min(q1[i], p2[i]) + 1) for i in cross)):
        coeff = 1
        kvec = [0] * n
        for i, k in zip(cross, ks):
            coeff *= comb(q1[i], k) * comb(p2[i], k) * factorial(k)
            kvec[i] = k
        ktot = sum(ks)
        out.append(
            (
                PBWMonomial(
                    base_z + (2 * ktot if kind is AlgebraKind.B else 0),
                    tuple(m1.xexps[i] + p2[i] - kvec[i] for i in range(n)),
                    tuple(q1[i] - kvec[i] + m2.dexps[i] for i in range(n)),
                ),
                coeff,
            )
        )
    return out


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Canonical product.  Bilinear and associative; unit is ``one``."""
    a._check_compatible(b)
    out: dict[PBWMonomial, Fraction] = {}
    for m1, c1 in a.coeffs.items():
        for m2, c2 in b.coeffs.items():
            c = c1 * c2
            for m, k in _mul_monomials(m1, m2, a.kind, a.n):
                s = out.get(m, Fraction(0)) + c * k
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
    return AlgebraElement(a.kind, a.n, out)


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a + b


def scale(c: Rational, a: AlgebraElement) -> AlgebraElement:
    return a.scaled(c)


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """ab - ba."""
    return multiply(a, b) - multiply(b, a)


# -- degrees and graded pieces ------------------------------------------------

def partial_degree(a: AlgebraElement) -> int:
    """Max total x,d exponent over the support; z contributes nothing."""
    if a.is_zero():
        raise ZeroElement("partial degree of the zero element is undefined")
    return max(m.partial for m in a.coeffs)


def graded_degree(a: AlgebraElement) -> int:
    """Max graded degree over the support (all generators count 1)."""
    if a.is_zero():
        raise ZeroElement("graded degree of the zero element is undefined")
    return max(m.degree for m in a.coeffs)


def graded_component(a: AlgebraElement, d: int) -> AlgebraElement:
    return AlgebraElement(a.kind, a.n, {m: c for m, c in a.coeffs.items() if m.degree == d})


# -- bases and the centralizer -------------------------------------------------

def basis_of_degree(kind: AlgebraKind, n: int, d: int) -> list[PBWMonomial]:
    """All monomials of graded degree d, in canonical order.

    For kinds B and C there are C(d+2n, 2n) of them; kind A omits z.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    slots = 2 * n if kind is AlgebraKind.A else 2 * n + 1
    monomials = []
    for cuts in itertools.combinations(range(d + slots - 1), slots - 1):
        exps = []
        prev = -1
        for c in cuts:
            exps.append(c - prev - 1)
            prev = c
        exps.append(d + slots - 2 - prev)
        if kind is AlgebraKind.A:
            ze, rest = 0, exps
        else:
            ze, rest = exps[0], exps[1:]
        monomials.append(PBWMonomial(ze, tuple(rest[:n]), tuple(rest[n:])))
    monomials.sort(key=PBWMonomial.sort_key)
    return monomials


def _generator_elements(kind: AlgebraKind, n: int) -> list[AlgebraElement]:
    gens = []
    if kind.has_z:
        gens.append(AlgebraElement.generator(kind, n, Generator.z()))
    gens.extend(AlgebraElement.generator(kind, n, Generator.x(i)) for i in range(1, n + 1))
    gens.extend(AlgebraElement.generator(kind, n, Generator.d(i)) for i in range(1, n + 1))
    return gens


def centralizer_in_degree(kind: AlgebraKind, n: int, d: int) -> list[AlgebraElement]:
    """Basis of the homogeneous degree-d elements commuting with every generator.

    Exact linear solve: unknowns are coefficients over the degree-d basis,
    one equation per generator and degree-(d+1) monomial.
    """
    basis = basis_of_degree(kind, n, d)
    index = {m: j for j, m in enumerate(basis)}
    ncols = len(basis)
    rows: list[list[Fraction]] = []
    for g in _generator_elements(kind, n):
        columns: list[dict[PBWMonomial, Fraction]] = []
        for m in basis:
            bm = AlgebraElement.monomial(kind, n, m)
            columns.append(commutator(bm, g).coeffs)
        targets = sorted({t for col in columns for t in col}, key=PBWMonomial.sort_key)
        for t in targets:
            row = [Fraction(0)] * ncols
            for j, col in enumerate(columns):
                if t in col:
                    row[j] = col[t]
            rows.append(row)
    if not rows:
        kernel = [[Fraction(1) if j == i else Fraction(0) for j in range(ncols)] for i in range(ncols)]
    else:
        kernel = linalg.nullspace(rows, ncols)
    out = []
    for vec in kernel:
        coeffs = {basis[j]: v for j, v in enumerate(vec) if v}
        out.append(AlgebraElement(kind, n, coeffs))
    return out


# -- divisibility by z ---------------------------------------------------------

def z_divides(a: AlgebraElement) -> bool:
    """True iff every monomial carries z at least once (vacuously true for 0)."""
    return all(m.zexp >= 1 for m in a.coeffs)


def divide_by_z(a: AlgebraElement) -> AlgebraElement:
    if not z_divides(a):
        raise NotDivisible("element has a term with no z factor")
    return AlgebraElement(
        a.kind,
        a.n,
        {PBWMonomial(m.zexp - 1, m.xexps, m.dexps): c for m, c in a.coeffs.items()},
    )


def z_shift(a: AlgebraElement, k: int) -> AlgebraElement:
    """Multiply by z^k (k >= 0); cheap because z is central."""
    if k < 0:
        raise ValueError("z_shift needs k >= 0")
    if not a.kind.has_z:
        raise IllegalGenerator("no z in this algebra")
    if k == 0:
        return a
    return AlgebraElement(
        a.kind,
        a.n,
        {PBWMonomial(m.zexp + k, m.xexps, m.dexps): c for m, c in a.coeffs.items()},
    )
