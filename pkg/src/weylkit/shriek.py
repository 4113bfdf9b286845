"""The finite-dimensional Koszul duals of the homogenized algebra.

Elements live in the 2^(2n+1)-dimensional span of square-free words

    x_{i_1} .. x_{i_s} d_{j_1} .. d_{j_t} z^(0 or 1)

with ascending indices and z rightmost.  Two algebra structures share this
carrier, selected by :class:`AlgebraKind`:

* ``B!`` -- distinct generators anticommute, x_i^2 = d_i^2 = 0, and
  z^2 = -(x_1 d_1 + .. + x_n d_n);
* ``C!`` -- the exterior algebra on all 2n+1 generators (z^2 = 0).

Rewriting a word sorts it by adjacent transpositions, each costing a sign,
kills repeated x/d generators, and substitutes doubled z's.  The z-count
of a word drops by two at every z^2 step and the inversion count drops at
every swap, so any redex order terminates; confluence is checked by test.

The z-free words form a subalgebra (the exterior algebra on the x and d
generators) and the words with z span its complementary free rank-one
piece; ``decompose`` splits along that direct sum.  The Frobenius form
beta(a, b) reads off the coefficient of the top word x_1..x_n d_1..d_n z
in a*b, and ``nakayama`` solves beta(sigma(y), -) = beta(-, y) for the
automorphism measuring beta's asymmetry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from . import linalg
from .errors import KindMismatch, SingularGram, SizeMismatch
from .generators import AlgebraKind, FreeExpression, Generator

Rational = Fraction | int

# ranks inside shriek words: x_i -> i-1, d_i -> n+i-1, z -> 2n (rightmost)


def _shriek_rank(g: Generator, n: int) -> int:
    if g.family == "x":
        return g.index - 1
    if g.family == "d":
        return n + g.index - 1
    return 2 * n


def rank_generator(r: int, n: int) -> Generator:
    if r < n:
        return Generator.x(r + 1)
    if r < 2 * n:
        return Generator.d(r - n + 1)
    return Generator.z()


@dataclass(frozen=True)
class ShriekWord:
    """A square-free basis word, stored as bitmasks plus a z flag."""

    xmask: int
    dmask: int
    zflag: int

    @property
    def degree(self) -> int:
        return self.xmask.bit_count() + self.dmask.bit_count() + self.zflag

    def ranks(self, n: int) -> tuple[int, ...]:
        out = [i for i in range(n) if self.xmask >> i & 1]
        out += [n + i for i in range(n) if self.dmask >> i & 1]
        if self.zflag:
            out.append(2 * n)
        return tuple(out)

    def sort_key(self, n: int):
        return (self.degree, self.ranks(n))

    def term_key(self, n: int):
        # leading terms first, matching the PBW element term order
        return (-self.degree, self.ranks(n))

    def word_str(self, n: int) -> str:
        ranks = self.ranks(n)
        if not ranks:
            return "1"
        return "*".join(str(rank_generator(r, n)) for r in ranks)


def _ranks_to_word(ranks: Iterable[int], n: int) -> ShriekWord:
    xm = dm = zf = 0
    for r in ranks:
        if r < n:
            xm |= 1 << r
        elif r < 2 * n:
            dm |= 1 << (r - n)
        else:
            zf = 1
    return ShriekWord(xm, dm, zf)


class ShriekElement:
    """Sparse rational combination of shriek basis words; immutable."""

    __slots__ = ("kind", "n", "coeffs")

    def __init__(self, n: int, coeffs: dict[ShriekWord, Fraction] | None = None,
                 kind: AlgebraKind = AlgebraKind.B_SHRIEK):
        if kind not in (AlgebraKind.B_SHRIEK, AlgebraKind.C_SHRIEK):
            raise KindMismatch(f"shriek engine handles kinds B! and C!, got {kind.value}")
        clean: dict[ShriekWord, Fraction] = {}
        for w, c in (coeffs or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if w.xmask >> n or w.dmask >> n:
                raise SizeMismatch(f"word {w} does not fit n={n}")
            clean[w] = c
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ShriekElement is immutable")

    @staticmethod
    def zero(n: int, kind: AlgebraKind = AlgebraKind.B_SHRIEK) -> "ShriekElement":
        return ShriekElement(n, {}, kind)

    @staticmethod
    def one(n: int, kind: AlgebraKind = AlgebraKind.B_SHRIEK) -> "ShriekElement":
        return ShriekElement(n, {ShriekWord(0, 0, 0): Fraction(1)}, kind)

    @staticmethod
    def word(n: int, w: ShriekWord, coeff: Rational = 1,
             kind: AlgebraKind = AlgebraKind.B_SHRIEK) -> "ShriekElement":
        return ShriekElement(n, {w: Fraction(coeff)}, kind)

    @staticmethod
    def generator(n: int, g: Generator, kind: AlgebraKind = AlgebraKind.B_SHRIEK) -> "ShriekElement":
        g.check(n, kind)
        return ShriekElement.word(n, _ranks_to_word([_shriek_rank(g, n)], n), 1, kind)

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[ShriekWord, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda wc: wc[0].term_key(self.n))

    def is_homogeneous(self) -> bool:
        return len({w.degree for w in self.coeffs}) <= 1

    def degrees(self) -> set[int]:
        return {w.degree for w in self.coeffs}

    def _check_compatible(self, other: "ShriekElement") -> None:
        if not isinstance(other, ShriekElement):
            raise TypeError(f"expected ShriekElement, got {type(other).__name__}")
        if self.n != other.n:
            raise SizeMismatch(f"pair counts differ: {self.n} vs {other.n}")
        if self.kind is not other.kind:
            raise KindMismatch(f"cannot mix {self.kind.value} with {other.kind.value}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ShriekElement)
            and self.kind is other.kind
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "ShriekElement") -> "ShriekElement":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            s = out.get(w, Fraction(0)) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return ShriekElement(self.n, out, self.kind)

    def __neg__(self) -> "ShriekElement":
        return ShriekElement(self.n, {w: -c for w, c in self.coeffs.items()}, self.kind)

    def __sub__(self, other: "ShriekElement") -> "ShriekElement":
        return self + (-other)

    def scaled(self, c: Rational) -> "ShriekElement":
        c = Fraction(c)
        if c == 0:
            return ShriekElement.zero(self.n, self.kind)
        return ShriekElement(self.n, {w: c * v for w, v in self.coeffs.items()}, self.kind)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __str__(self) -> str:
        from .expressions import render

        return render(self, "text")

    def __repr__(self) -> str:
        return f"<{self.kind.value}(n={self.n}) {self}>"


# -- basis enumeration ---------------------------------------------------------

def shriek_basis(n: int) -> list[ShriekWord]:
    """All 2^(2n+1) basis words, sorted by (degree, word order)."""
    words = [
        ShriekWord(xm, dm, zf)
        for xm in range(1 << n)
        for dm in range(1 << n)
        for zf in (0, 1)
    ]
    words.sort(key=lambda w: w.sort_key(n))
    return words


def shriek_basis_of_degree(n: int, j: int) -> list[ShriekWord]:
    return [w for w in shriek_basis(n) if w.degree == j]


def degree_dimensions(n: int, kind: AlgebraKind = AlgebraKind.B_SHRIEK) -> list[int]:
    """Per-degree dimensions.  For B!: C(2n,j) + C(2n,j-1); for C!: C(2n+1,j)."""
    if kind is AlgebraKind.C_SHRIEK:
        return [comb(2 * n + 1, j) for j in range(2 * n + 2)]
    return [comb(2 * n, j) + (comb(2 * n, j - 1) if j >= 1 else 0) for j in range(2 * n + 2)]


# -- word reduction ------------------------------------------------------------

def _reduce_rank_words(
    terms: dict[tuple[int, ...], Fraction],
    n: int,
    kind: AlgebraKind,
    rng: random.Random | None = None,
) -> dict[ShriekWord, Fraction]:
    z_rank = 2 * n
    out: dict[ShriekWord, Fraction] = {}
    pending = dict(terms)
    while pending:
        ranks, coeff = pending.popitem()
        if coeff == 0:
            continue
        redexes = [i for i in range(len(ranks) - 1) if ranks[i] >= ranks[i + 1]]
        if not redexes:
            w = _ranks_to_word(ranks, n)
            s = out.get(w, Fraction(0)) + coeff
            if s:
                out[w] = s
            else:
                out.pop(w, None)
            continue
        pos = redexes[0] if rng is None else rng.choice(redexes)
        a, b = ranks[pos], ranks[pos + 1]
        if a > b:
            swapped = ranks[:pos] + (b, a) + ranks[pos + 2 :]
            pending[swapped] = pending.get(swapped, Fraction(0)) - coeff
        elif a == z_rank:
            # z z -> -(x_1 d_1 + .. + x_n d_n) in B!; 0 in C!
            if kind is AlgebraKind.B_SHRIEK:
                for i in range(n):
                    sub = ranks[:pos] + (i, n + i) + ranks[pos + 2 :]
                    pending[sub] = pending.get(sub, Fraction(0)) - coeff
        # equal non-z generators: the term dies
    return out


def reduce_word(
    word: Sequence[Generator],
    n: int,
    kind: AlgebraKind = AlgebraKind.B_SHRIEK,
    rng: random.Random | None = None,
) -> ShriekElement:
    """Canonical form of one free word.

    >>> str(reduce_word([Generator.z(), Generator.z()], 1))
    '-x1*d1'
    """
    for g in word:
        g.check(n, kind)
    ranks = tuple(_shriek_rank(g, n) for g in word)
    return ShriekElement(n, _reduce_rank_words({ranks: Fraction(1)}, n, kind, rng), kind)


def reduce_expression(
    expr: FreeExpression,
    kind: AlgebraKind = AlgebraKind.B_SHRIEK,
    rng: random.Random | None = None,
) -> ShriekElement:
    """Reduce a parsed free expression into the shriek algebra."""
    expr.check(kind)
    n = expr.n
    terms: dict[tuple[int, ...], Fraction] = {}
    for c, word in expr.terms:
        ranks = tuple(_shriek_rank(g, n) for g in word)
        terms[ranks] = terms.get(ranks, Fraction(0)) + c
    return ShriekElement(n, _reduce_rank_words(terms, n, kind, rng), kind)


# word-pair product table, filled lazily; entries are immutable and the
# computation is deterministic, so concurrent duplicate inserts are benign
_WORD_PRODUCTS: dict[tuple[AlgebraKind, int, ShriekWord, ShriekWord], tuple[tuple[ShriekWord, Fraction], ...]] = {}


def _word_product(u: ShriekWord, v: ShriekWord, n: int, kind: AlgebraKind):
    key = (kind, n, u, v)
    hit = _WORD_PRODUCTS.get(key)
    if hit is None:
        ranks = u.ranks(n) + v.ranks(n)
        hit = tuple(_reduce_rank_words({ranks: Fraction(1)}, n, kind).items())
        _WORD_PRODUCTS[key] = hit
    return hit


def multiply(a: ShriekElement, b: ShriekElement) -> ShriekElement:
    """Bilinear extension of word concatenation followed by reduction."""
    a._check_compatible(b)
    out: dict[ShriekWord, Fraction] = {}
    for u, cu in a.coeffs.items():
        for v, cv in b.coeffs.items():
            c = cu * cv
            for w, k in _word_product(u, v, a.n, a.kind):
                s = out.get(w, Fraction(0)) + c * k
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
    return ShriekElement(a.n, out, a.kind)


# -- the direct-sum decomposition ----------------------------------------------

def decompose(e: ShriekElement) -> tuple[ShriekElement, ShriekElement]:
    """Split into (z-free part, z part); the two parts sum back to ``e``.

    The z-free words form a subalgebra (exterior algebra on x's and d's)
    and the z words are its image under left multiplication by z.
    """
    cpart = {w: c for w, c in e.coeffs.items() if w.zflag == 0}
    zpart = {w: c for w, c in e.coeffs.items() if w.zflag == 1}
    return (
        ShriekElement(e.n, cpart, e.kind),
        ShriekElement(e.n, zpart, e.kind),
    )


# -- Frobenius structure ---------------------------------------------------------

def top_word(n: int) -> ShriekWord:
    return ShriekWord((1 << n) - 1, (1 << n) - 1, 1)


def frobenius_functional(e: ShriekElement) -> Fraction:
    """Coefficient of the top word x_1..x_n d_1..d_n z."""
    return e.coeffs.get(top_word(e.n), Fraction(0))


def bilinear_form(a: ShriekElement, b: ShriekElement) -> Fraction:
    """beta(a, b) = top coefficient of a*b; associative by construction."""
    return frobenius_functional(multiply(a, b))


def gram_matrix(n: int, j: int) -> list[list[Fraction]]:
    """[beta(u_i, v_k)] over the degree-(j, 2n+1-j) basis pair."""
    if not 0 <= j <= 2 * n + 1:
        raise ValueError(f"degree {j} out of range 0..{2 * n + 1}")
    rows = shriek_basis_of_degree(n, j)
    cols = shriek_basis_of_degree(n, 2 * n + 1 - j)
    return [
        [bilinear_form(ShriekElement.word(n, u), ShriekElement.word(n, v)) for v in cols]
        for u in rows
    ]


@dataclass(frozen=True)
class NakayamaMap:
    """Images of the degree-1 generators under the Nakayama automorphism."""

    n: int
    images: dict[str, ShriekElement]

    def __post_init__(self):
        for name, img in self.images.items():
            if img.degrees() not in (set(), {1}):
                raise ValueError(f"image of {name} is not homogeneous of degree 1")

    def image_of(self, g: Generator) -> ShriekElement:
        return self.images[str(g)]

    @property
    def z_scalar(self) -> Fraction:
        """The k with sigma(z) = k z; raises if the image is not a z multiple."""
        img = self.images["z"]
        zword = _ranks_to_word([2 * self.n], self.n)
        if set(img.coeffs) != {zword}:
            raise ValueError("sigma(z) is not a scalar multiple of z")
        return img.coeffs[zword]


def nakayama(n: int) -> NakayamaMap:
    """Solve beta(sigma(y), v) = beta(v, y) for each degree-1 generator y.

    Uses the two Gram matrices in degrees (1, 2n) and (2n, 1); raises
    :class:`SingularGram` if either system degenerates, which would
    contradict nondegeneracy of the form.
    """
    deg1 = shriek_basis_of_degree(n, 1)
    g1 = gram_matrix(n, 1)
    g2n = gram_matrix(n, 2 * n)
    m = len(deg1)
    system = [[g1[i][k] for i in range(m)] for k in range(m)]  # transpose
    images: dict[str, ShriekElement] = {}
    coeff_rows: list[list[Fraction]] = []
    for jy, yword in enumerate(deg1):
        rhs = [g2n[k][jy] for k in range(m)]
        try:
            c = linalg.solve(system, rhs)
        except ValueError as exc:
            raise SingularGram(f"degree-1 Gram system is singular: {exc}") from exc
        coeff_rows.append(c)
        name = yword.word_str(n)
        images[name] = ShriekElement(n, {deg1[i]: c[i] for i in range(m) if c[i]})
    if linalg.det(coeff_rows) == 0:
        raise SingularGram("computed generator images are not linearly independent")
    return NakayamaMap(n, images)


def apply_automorphism(m: NakayamaMap, e: ShriekElement) -> ShriekElement:
    """Multiplicative-linear extension of the generator images."""
    if m.n != e.n:
        raise SizeMismatch(f"map is for n={m.n}, element has n={e.n}")
    out = ShriekElement.zero(e.n, e.kind)
    for w, c in e.coeffs.items():
        img = ShriekElement.one(e.n, e.kind)
        for r in w.ranks(e.n):
            factor = m.images[str(rank_generator(r, e.n))]
            if factor.kind is not e.kind:
                factor = ShriekElement(factor.n, factor.coeffs, e.kind)
            img = multiply(img, factor)
        out = out + img.scaled(c)
    return out
