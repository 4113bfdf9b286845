"""Quadratic presentations and their Koszul duals.

A quadratic presentation is a list of relations in the tensor square of
the degree-1 generator space.  The dual relation space is the orthogonal
complement under the pairing

    <u (x) v, u' (x) v'>  =  [u = v'] [v = u']

on basis tensors (note the transposition: the left slot of one factor
pairs against the right slot of the other).  With the bracket convention
used by the PBW engine (d_i x_i - x_i d_i = z^2, relations written
d (x) x - x (x) d - z (x) z), this is the convention under which the dual
of the homogenized algebra comes out on the relations

    x_i^2,  d_i^2,  all anticommutators,  sum_i x_i d_i + z^2,

including the mixed anticommutators x_i d_j + d_j x_i.  The untwisted
pairing would flip the sign of the z^2 term instead.  The structured
presentation is never trusted: ``dual_presentation`` certifies it spans
the computed complement and raises if it does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import RankDeficientInput
from .generators import AlgebraKind

# one relation: sparse map over ordered generator-index pairs
Relation = dict[tuple[int, int], Fraction]


def generator_names(n: int) -> tuple[str, ...]:
    return tuple(
        [f"x{i}" for i in range(1, n + 1)]
        + [f"d{i}" for i in range(1, n + 1)]
        + ["z"]
    )


@dataclass(frozen=True)
class QuadraticPresentation:
    """Generators x_1..x_n, d_1..d_n, z plus homogeneous quadratic relations."""

    n: int
    kind: AlgebraKind
    generators: tuple[str, ...]
    relations: tuple[Relation, ...]

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def relation_rows(self) -> list[list[Fraction]]:
        """Relations as dense coefficient rows over the (u,v) grid."""
        g = self.ngens
        rows = []
        for rel in self.relations:
            row = [Fraction(0)] * (g * g)
            for (u, v), c in rel.items():
                row[u * g + v] = c
            rows.append(row)
        return rows


@dataclass(frozen=True)
class DualRelationBasis:
    """A basis of the orthogonal complement of a relation space."""

    ngens: int
    basis: tuple[Relation, ...]


def _comm(u: int, v: int) -> Relation:
    return {(u, v): Fraction(1), (v, u): Fraction(-1)}


def _anticomm(u: int, v: int) -> Relation:
    return {(u, v): Fraction(1), (v, u): Fraction(1)}


def relations_of(kind: AlgebraKind, n: int) -> QuadraticPresentation:
    """The defining quadratic relations of B(n) or C(n).

    For B(n) these are the 2n^2+n relations: x- and d-commutators, the
    mixed relations d_i (x) x_j - x_j (x) d_i - [i=j] z (x) z, and the
    z-centrality commutators.  For C(n): all commutators in 2n+1
    variables.
    """
    if kind not in (AlgebraKind.B, AlgebraKind.C):
        raise ValueError(f"quadratic presentations exist for kinds B and C, not {kind.value}")
    gens = generator_names(n)
    x = list(range(n))
    d = list(range(n, 2 * n))
    z = 2 * n
    rels: list[Relation] = []
    if kind is AlgebraKind.C:
        for u in range(2 * n + 1):
            for v in range(u + 1, 2 * n + 1):
                rels.append(_comm(u, v))
    else:
        for i in range(n):
            for j in range(i + 1, n):
                rels.append(_comm(x[i], x[j]))
        for i in range(n):
            for j in range(i + 1, n):
                rels.append(_comm(d[i], d[j]))
        for i in range(n):
            for j in range(n):
                rel = _comm(d[i], x[j])
                if i == j:
                    rel[(z, z)] = Fraction(-1)
                rels.append(rel)
        for i in range(n):
            rels.append(_comm(x[i], z))
        for i in range(n):
            rels.append(_comm(d[i], z))
    return QuadraticPresentation(n, kind, gens, tuple(rels))


def pairing(r: Relation, s: Relation) -> Fraction:
    """<r, s> = sum over (u,v) of r[u,v] * s[v,u]."""
    total = Fraction(0)
    for (u, v), c in r.items():
        other = s.get((v, u))
        if other is not None:
            total += c * other
    return total


def _pairing_rows(p: QuadraticPresentation) -> list[list[Fraction]]:
    # row such that row . flat(s) = pairing(rel, s)
    g = p.ngens
    rows = []
    for rel in p.relations:
        row = [Fraction(0)] * (g * g)
        for (u, v), c in rel.items():
            row[v * g + u] = c
        rows.append(row)
    return rows


def orthogonal_complement(p: QuadraticPresentation) -> DualRelationBasis:
    """Exact kernel basis of the pairing against ``p``'s relations.

    Raises :class:`RankDeficientInput` when the relation list is
    linearly dependent.
    """
    g = p.ngens
    rows = _pairing_rows(p)
    if linalg.rank(rows) != len(rows):
        raise RankDeficientInput("relation list is linearly dependent")
    basis = []
    for vec in linalg.nullspace(rows, g * g):
        rel: Relation = {}
        for idx, c in enumerate(vec):
            if c:
                rel[(idx // g, idx % g)] = c
        basis.append(rel)
    return DualRelationBasis(g, tuple(basis))


def _relation_rows(rels: list[Relation] | tuple[Relation, ...], g: int) -> list[list[Fraction]]:
    rows = []
    for rel in rels:
        row = [Fraction(0)] * (g * g)
        for (u, v), c in rel.items():
            row[u * g + v] = c
        rows.append(row)
    return rows


def dual_presentation(kind: AlgebraKind, n: int) -> QuadraticPresentation:
    """The structured presentation of the Koszul dual of B(n) or C(n).

    For B(n): squares of x_i and d_i, anticommutators of every distinct
    generator pair (including all mixed x_i d_j), and sum_i x_i d_i + z^2.
    For C(n): squares of all generators and all anticommutators (the
    exterior algebra on 2n+1 generators).  The returned set is certified
    to span exactly the computed orthogonal complement.
    """
    if kind not in (AlgebraKind.B, AlgebraKind.C):
        raise ValueError(f"dual presentations exist for kinds B and C, not {kind.value}")
    gens = generator_names(n)
    x = list(range(n))
    d = list(range(n, 2 * n))
    z = 2 * n
    rels: list[Relation] = []
    if kind is AlgebraKind.C:
        for u in range(2 * n + 1):
            rels.append({(u, u): Fraction(1)})
        for u in range(2 * n + 1):
            for v in range(u + 1, 2 * n + 1):
                rels.append(_anticomm(u, v))
    else:
        for i in range(n):
            rels.append({(x[i], x[i]): Fraction(1)})
        for i in range(n):
            rels.append({(d[i], d[i]): Fraction(1)})
        for i in range(n):
            for j in range(i + 1, n):
                rels.append(_anticomm(x[i], x[j]))
        for i in range(n):
            for j in range(i + 1, n):
                rels.append(_anticomm(d[i], d[j]))
        for i in range(n):
            for j in range(n):
                rels.append(_anticomm(x[i], d[j]))
        for i in range(n):
            rels.append(_anticomm(x[i], z))
        for i in range(n):
            rels.append(_anticomm(d[i], z))
        loop: Relation = {(x[i], d[i]): Fraction(1) for i in range(n)}
        loop[(z, z)] = Fraction(1)
        rels.append(loop)
    g = len(gens)
    complement = orthogonal_complement(relations_of(kind, n))
    if not linalg.span_equal(_relation_rows(rels, g), _relation_rows(complement.basis, g)):
        raise RuntimeError(
            "structured dual presentation does not span the computed complement"
        )
    return QuadraticPresentation(n, kind, gens, tuple(rels))


def relation_text(rel: Relation, gens: tuple[str, ...]) -> str:
    """Human-readable form of one relation, e.g. ``d1*x1 - x1*d1 - z^2``."""

    def mono(u: int, v: int) -> str:
        if u == v:
            return f"{gens[u]}^2"
        return f"{gens[u]}*{gens[v]}"

    items = sorted(rel.items())
    parts = []
    for i, ((u, v), c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        body = mono(u, v) if mag == 1 else f"{mag}*{mono(u, v)}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts) if parts else "0"
