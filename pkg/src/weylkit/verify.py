"""Named, reproducible verification suites.

Each suite binds a family of algebraic claims to executable checks over a
deterministic sample stream derived from (seed, suite name, n).  A check
records a claim id, the mathematical statement it tests (its anchor), a
pass/fail status, a rendered counterexample on failure, and elapsed time.

Suites: pbw-laws, center, dual-orthogonality, shriek-dims, frobenius,
nakayama, decomposition, localization, roundtrip.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Callable

from . import linalg
from .errors import UnknownSuite, UnsupportedN
from .expressions import parse, render
from .generators import AlgebraKind, Generator
from .pbw import (
    AlgebraElement,
    PBWMonomial,
    basis_of_degree,
    centralizer_in_degree,
    commutator,
    graded_degree,
    multiply,
    normal_form,
    partial_degree,
    word_normal_form,
    z_shift,
)
from .quadratic import (
    QuadraticPresentation,
    _relation_rows,
    dual_presentation,
    orthogonal_complement,
    pairing,
    relations_of,
)
from .shriek import (
    ShriekElement,
    apply_automorphism,
    bilinear_form,
    decompose,
    degree_dimensions,
    gram_matrix,
    nakayama,
    reduce_expression,
    shriek_basis,
    shriek_basis_of_degree,
    top_word,
)
from . import localization as loc

DEFAULT_SEED = 1729
DEFAULT_BUDGET = 200


@dataclass
class CheckResult:
    claim_id: str
    paper_anchor: str
    status: str
    witness: str | None
    elapsed_millis: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class SuiteReport:
    suite_name: str
    n_range: list[int]
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "suiteName": self.suite_name,
            "nRange": self.n_range,
            "passed": self.passed,
            "checks": [
                {
                    "claimId": c.claim_id,
                    "paperAnchor": c.paper_anchor,
                    "status": c.status,
                    "witness": c.witness,
                    "elapsedMillis": c.elapsed_millis,
                }
                for c in self.checks
            ],
        }

    def text_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            line = f"[{self.suite_name}] {c.status.upper():4s} {c.claim_id} -- {c.paper_anchor}"
            if c.witness:
                line += f" | witness: {c.witness}"
            lines.append(line)
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(
            f"[{self.suite_name}] suite {verdict} ({len(self.checks)} checks, n in {self.n_range})"
        )
        return lines


class _Recorder:
    def __init__(self, report: SuiteReport, n: int):
        self.report = report
        self.n = n

    def check(self, claim_id: str, anchor: str, fn: Callable[[], str | None]) -> None:
        start = time.perf_counter()
        try:
            witness = fn()
        except Exception as exc:  # a crashed check is a failed check
            witness = f"exception: {exc!r}"
        elapsed = int((time.perf_counter() - start) * 1000)
        self.report.checks.append(
            CheckResult(
                claim_id=f"{claim_id}[n={self.n}]",
                paper_anchor=anchor,
                status="fail" if witness else "pass",
                witness=witness,
                elapsed_millis=elapsed,
            )
        )


# -- deterministic random objects -----------------------------------------------

def random_element(
    rng: random.Random,
    kind: AlgebraKind,
    n: int,
    max_partial: int = 3,
    max_terms: int = 3,
    max_z: int = 2,
    nonzero: bool = False,
) -> AlgebraElement:
    while True:
        coeffs: dict[PBWMonomial, Fraction] = {}
        for _ in range(rng.randint(1 if nonzero else 0, max_terms)):
            budget = rng.randint(0, max_partial)
            exps = [0] * (2 * n)
            for _ in range(budget):
                exps[rng.randrange(2 * n)] += 1
            ze = 0 if kind is AlgebraKind.A else rng.randint(0, max_z)
            m = PBWMonomial(ze, tuple(exps[:n]), tuple(exps[n:]))
            c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))
            coeffs[m] = coeffs.get(m, Fraction(0)) + c
        e = AlgebraElement(kind, n, coeffs)
        if not nonzero or not e.is_zero():
            return e


def random_homogeneous(
    rng: random.Random, kind: AlgebraKind, n: int, degree: int, max_terms: int = 3
) -> AlgebraElement:
    basis = basis_of_degree(kind, n, degree)
    coeffs: dict[PBWMonomial, Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        m = rng.choice(basis)
        coeffs[m] = coeffs.get(m, Fraction(0)) + rng.choice([-2, -1, 1, 2])
    return AlgebraElement(kind, n, coeffs)


def random_word(
    rng: random.Random, n: int, kind: AlgebraKind, max_len: int = 6
) -> tuple[Generator, ...]:
    pool = [Generator.x(i) for i in range(1, n + 1)] + [Generator.d(i) for i in range(1, n + 1)]
    if kind.has_z:
        pool.append(Generator.z())
    return tuple(rng.choice(pool) for _ in range(rng.randint(0, max_len)))


def random_shriek(
    rng: random.Random, n: int, max_terms: int = 3, nonzero: bool = False
) -> ShriekElement:
    words = shriek_basis(n)
    while True:
        coeffs: dict = {}
        for _ in range(rng.randint(1 if nonzero else 0, max_terms)):
            w = rng.choice(words)
            coeffs[w] = coeffs.get(w, Fraction(0)) + rng.choice([-2, -1, 1, 2])
        e = ShriekElement(n, coeffs)
        if not nonzero or not e.is_zero():
            return e


# -- individual suites ------------------------------------------------------------

def _suite_pbw_laws(rec: _Recorder, n: int, rng: random.Random, budget: int) -> None:
    kind = AlgebraKind.B

    def partial_additivity():
        for _ in range(budget):
            a = random_element(rng, kind, n, nonzero=True)
            b = random_element(rng, kind, n, nonzero=True)
            ab = multiply(a, b)
            if ab.is_zero() or partial_degree(ab) != partial_degree(a) + partial_degree(b):
                return f"a = {a}; b = {b}; ab = {ab}"
        return None

    rec.check("partial-additivity", "partial(ab) = partial(a) + partial(b)", partial_additivity)

    def partial_subadditivity():
        for _ in range(budget):
            a = random_element(rng, kind, n, nonzero=True)
            b = random_element(rng, kind, n, nonzero=True)
            s = a + b
            if not s.is_zero() and partial_degree(s) > max(partial_degree(a), partial_degree(b)):
                return f"a = {a}; b = {b}"
        return None

    rec.check(
        "partial-subadditivity", "partial(a+b) <= max(partial(a), partial(b))", partial_subadditivity
    )

    def commutator_drop():
        for _ in range(budget):
            a = random_element(rng, kind, n, nonzero=True)
            b = random_element(rng, kind, n, nonzero=True)
            c = commutator(a, b)
            if not c.is_zero() and partial_degree(c) > partial_degree(a) + partial_degree(b) - 1:
                return f"a = {a}; b = {b}; [a,b] = {c}"
        return None

    rec.check("commutator-filtration-drop", "[F_p, F_t] lies in F_(p+t-1)", commutator_drop)

    def no_zero_divisors():
        for _ in range(budget):
            a = random_element(rng, kind, n, nonzero=True)
            b = random_element(rng, kind, n, nonzero=True)
            if multiply(a, b).is_zero():
                return f"a = {a}; b = {b}"
        return None

    rec.check("no-zero-divisors", "the homogenized algebra is an integral domain", no_zero_divisors)

    def graded_multiplicativity():
        for _ in range(budget):
            da, db = rng.randint(0, 3), rng.randint(0, 3)
            a = random_homogeneous(rng, kind, n, da)
            b = random_homogeneous(rng, kind, n, db)
            if a.is_zero() or b.is_zero():
                continue
            ab = multiply(a, b)
            if ab.is_zero() or graded_degree(ab) != da + db:
                return f"a = {a}; b = {b}"
        return None

    rec.check(
        "graded-multiplicativity",
        "deg(ab) = deg(a) + deg(b) for homogeneous a, b",
        graded_multiplicativity,
    )

    def unit_and_bilinearity():
        one = AlgebraElement.one(kind, n)
        for _ in range(max(budget // 4, 10)):
            a = random_element(rng, kind, n)
            b = random_element(rng, kind, n)
            c = random_element(rng, kind, n)
            lam = Fraction(rng.randint(-3, 3), rng.choice([1, 2]))
            if multiply(a, one) != a or multiply(one, a) != a:
                return f"unit law fails on a = {a}"
            if multiply(a + b, c) != multiply(a, c) + multiply(b, c):
                return f"left distributivity fails: a = {a}; b = {b}; c = {c}"
            if multiply(c, a + b) != multiply(c, a) + multiply(c, b):
                return f"right distributivity fails: a = {a}; b = {b}; c = {c}"
            if multiply(a.scaled(lam), b) != multiply(a, b).scaled(lam):
                return f"scalar compatibility fails: a = {a}; b = {b}; lam = {lam}"
        return None

    rec.check("unit-bilinearity", "multiplication is unital and bilinear", unit_and_bilinearity)

    def associativity():
        for _ in range(budget):
            a = random_element(rng, kind, n)
            b = random_element(rng, kind, n)
            c = random_element(rng, kind, n)
            if multiply(multiply(a, b), c) != multiply(a, multiply(b, c)):
                return f"a = {a}; b = {b}; c = {c}"
        return None

    rec.check("associativity", "(ab)c = a(bc)", associativity)

    def confluence():
        samples = max(budget // 4, 20)
        for _ in range(samples):
            k = rng.choice([AlgebraKind.A, AlgebraKind.B, AlgebraKind.C])
            w = random_word(rng, n, k)
            reference = word_normal_form(w, k, n)
            for _ in range(3):
                if word_normal_form(w, k, n, rng=rng) != reference:
                    return f"word {'*'.join(map(str, w)) or '1'} in {k.value}"
            # split the word and cross-check against the closed-form product
            cut = rng.randint(0, len(w))
            left = word_normal_form(w[:cut], k, n)
            right = word_normal_form(w[cut:], k, n)
            if multiply(left, right) != reference:
                return f"split product mismatch on {'*'.join(map(str, w)) or '1'}"
        return None

    rec.check("confluence", "randomized reduction orders yield one normal form", confluence)

    def basis_dimension():
        for d in range(0, 9):
            got = len(basis_of_degree(AlgebraKind.B, n, d))
            want = comb(d + 2 * n, 2 * n)
            if got != want:
                return f"degree {d}: {got} != C({d + 2 * n},{2 * n}) = {want}"
        return None

    rec.check("basis-dimension", "PBW basis: dim B_d = C(d+2n, 2n)", basis_dimension)

    def filtration_zero_piece():
        one = AlgebraElement.one(kind, n)
        if partial_degree(one) != 0:
            return "1 is not in filtration degree 0"
        for _ in range(max(budget // 10, 10)):
            a = random_element(rng, kind, n, nonzero=True)
            in_kz = all(m.partial == 0 for m in a.coeffs)
            if (partial_degree(a) == 0) != in_kz:
                return f"a = {a}"
        return None

    rec.check(
        "filtration-zero-piece",
        "the partial-degree-0 piece is exactly the z polynomials, and contains 1",
        filtration_zero_piece,
    )


def _suite_center(rec: _Recorder, n: int, rng: random.Random, budget: int) -> None:
    max_degree = 5

    def center_dims():
        for d in range(0, max_degree + 1):
            cz = centralizer_in_degree(AlgebraKind.B, n, d)
            if len(cz) != 1:
                return f"degree {d}: dimension {len(cz)}"
        return None

    rec.check("center-dimension", "the center is K[z]: one dimension per degree", center_dims)

    def center_span():
        for d in range(0, max_degree + 1):
            cz = centralizer_in_degree(AlgebraKind.B, n, d)
            zd = PBWMonomial(d, (0,) * n, (0,) * n)
            for v in cz:
                if set(v.coeffs) != {zd}:
                    return f"degree {d}: basis vector {v} is not a multiple of z^{d}"
        return None

    rec.check("center-spanned-by-z-power", "the degree-d center is spanned by z^d", center_span)


def _suite_dual(rec: _Recorder, n: int, rng: random.Random, budget: int) -> None:
    def relation_count():
        got = len(relations_of(AlgebraKind.B, n).relations)
        want = 2 * n * n + n
        return None if got == want else f"{got} != {want}"

    rec.check("relation-count", "B(n) has 2n^2+n quadratic relations", relation_count)

    def complement_dimension():
        comp = orthogonal_complement(relations_of(AlgebraKind.B, n))
        want = 2 * n * n + 3 * n + 1
        return None if len(comp.basis) == want else f"{len(comp.basis)} != {want}"

    rec.check("complement-dimension", "dim of the dual relation space is 2n^2+3n+1", complement_dimension)

    def rank_nullity():
        p = relations_of(AlgebraKind.B, n)
        comp = orthogonal_complement(p)
        total = len(p.relations) + len(comp.basis)
        want = (2 * n + 1) ** 2
        return None if total == want else f"{total} != {want}"

    rec.check("rank-nullity", "dim R + dim R-perp = (2n+1)^2", rank_nullity)

    def orthogonality():
        p = relations_of(AlgebraKind.B, n)
        comp = orthogonal_complement(p)
        for r in p.relations:
            for s in comp.basis:
                if pairing(r, s) != 0:
                    return f"pairing gives {pairing(r, s)}"
        dual = dual_presentation(AlgebraKind.B, n)
        for r in p.relations:
            for s in dual.relations:
                if pairing(r, s) != 0:
                    return "structured dual relation not orthogonal"
        return None

    rec.check("orthogonality", "relations pair to zero with the dual relations", orthogonality)

    def structured_span():
        dual_presentation(AlgebraKind.B, n)  # certifies internally
        dual_presentation(AlgebraKind.C, n)
        return None

    rec.check(
        "structured-dual-spans",
        "squares, anticommutators and sum x_i d_i + z^2 span the complement",
        structured_span,
    )

    if n <= 2:

        def involution():
            p = relations_of(AlgebraKind.B, n)
            comp = orthogonal_complement(p)
            comp_pres = QuadraticPresentation(n, AlgebraKind.B, p.generators, comp.basis)
            back = orthogonal_complement(comp_pres)
            g = len(p.generators)
            ok = linalg.span_equal(_relation_rows(back.basis, g), _relation_rows(p.relations, g))
            return None if ok else "double complement differs from the relation span"

        rec.check("involution", "the orthogonal complement is an involution", involution)


def _suite_shriek_dims(rec: _Recorder, n: int, rng: random.Random, budget: int) -> None:
    def dims():
        got = [len(shriek_basis_of_degree(n, j)) for j in range(2 * n + 2)]
        formula = [comb(2 * n, j) + (comb(2 * n, j - 1) if j else 0) for j in range(2 * n + 2)]
        if got != formula or degree_dimensions(n) != formula:
            return f"{got} != {formula}"
        return None

    rec.check("degree-dimensions", "dim (B!)_j = C(2n,j) + C(2n,j-1)", dims)

    def palindrome():
        got = degree_dimensions(n)
        return None if got == got[::-1] else f"{got}"

    rec.check("dimension-palindrome", "dim (B!)_j = dim (B!)_(2n+1-j)", palindrome)

    def total():
        got = len(shriek_basis(n))
        want = 2 ** (2 * n + 1)
        return None if got == want else f"{got} != {want}"

    rec.check("total-dimension", "dim B! = 2^(2n+1)", total)

    def split():
        zfree = sum(1 for w in shriek_basis(n) if w.zflag == 0)
        zfull = sum(1 for w in shriek_basis(n) if w.zflag == 1)
        want = 2 ** (2 * n)
        return None if zfree == zfull == want else f"{zfree}, {zfull} != {want}"

    rec.check("free-rank-two-split", "B! is free of rank two over its z-free subalgebra", split)

    if n <= 2:
        # the quantum-PBW statement at desk scale: word reduction is
        # confluent, so the square-free words really are a basis
        from .shriek import multiply as smul, reduce_word as sreduce

        def reduction_confluence():
            pool = [Generator.x(i) for i in range(1, n + 1)]
            pool += [Generator.d(i) for i in range(1, n + 1)]
            pool.append(Generator.z())
            for _ in range(max(budget // 4, 20)):
                word = [rng.choice(pool) for _ in range(rng.randint(0, 6))]
                ref = sreduce(word, n)
                for _ in range(3):
                    if sreduce(word, n, rng=rng) != ref:
                        return f"word {'*'.join(map(str, word)) or '1'}"
            return None

        rec.check(
            "reduction-confluence",
            "quantum-PBW: randomized shriek reductions agree",
            reduction_confluence,
        )

        def shriek_associativity():
            words = shriek_basis(n)
            for _ in range(budget):
                a = ShriekElement.word(n, rng.choice(words))
                b = ShriekElement.word(n, rng.choice(words))
                c = ShriekElement.word(n, rng.choice(words))
                if smul(smul(a, b), c) != smul(a, smul(b, c)):
                    return f"a = {a}; b = {b}; c = {c}"
            return None

        rec.check("shriek-associativity", "(ab)c = a(bc) in B!", shriek_associativity)


def _suite_frobenius(rec: _Recorder, n: int, rng: random.Random, budget: int) -> None:
    from .shriek import multiply as smul

    def gram_invertible():
        for j in range(0, 2 * n + 2):
            if linalg.det(gram_matrix(n, j)) == 0:
                return f"gram({n},{j}) is singular"
        return None

    rec.check("gram-invertible", "the Frobenius form is nondegenerate in every degree", gram_invertible)

    def form_associativity():
        words = shriek_basis(n)
        if n == 1:
            triples = itertools.product(words, repeat=3)
        else:
            triples = ((rng.choice(words), rng.choice(words), rng.choice(words)) for _ in range(budget))
        for wa, wb, wc in triples:
            a = ShriekElement.word(n, wa)
            b = ShriekElement.word(n, wb)
            c = ShriekElement.word(n, wc)
            if bilinear_form(smul(a, b), c) != bilinear_form(a, smul(b, c)):
                return f"a = {a}; b = {b}; c = {c}"
        return None

    rec.check("form-associativity", "beta(ab, c) = beta(a, bc)", form_associativity)

    def unit_pairing():
        one = ShriekElement.one(n)
        top = ShriekElement.word(n, top_word(n))
        if bilinear_form(one, top) != 1 or bilinear_form(top, one) != 1:
            return "beta(1, top) != 1"
        return None

    rec.check("top-pairing-unit", "beta(1, top word) = 1", unit_pairing)


def _suite_nakayama(rec: _Recorder, n: int, rng: random.Random, budget: int) -> None:
    nm = nakayama(n)
    words = shriek_basis(n)
    from .shriek import multiply as smul

    def defining_identity():
        for wa in words:
            for wb in words:
                a = ShriekElement.word(n, wa)
                b = ShriekElement.word(n, wb)
                if bilinear_form(apply_automorphism(nm, a), b) != bilinear_form(b, a):
                    return f"y = {a}; x = {b}"
        return None

    rec.check("defining-identity", "beta(sigma(y), x) = beta(x, y)", defining_identity)

    def multiplicativity():
        if n == 1:
            pairs = itertools.product(words, repeat=2)
        else:
            pairs = ((rng.choice(words), rng.choice(words)) for _ in range(budget))
        for wa, wb in pairs:
            a = ShriekElement.word(n, wa)
            b = ShriekElement.word(n, wb)
            if apply_automorphism(nm, smul(a, b)) != smul(
                apply_automorphism(nm, a), apply_automorphism(nm, b)
            ):
                return f"a = {a}; b = {b}"
        return None

    rec.check("multiplicativity", "sigma(uv) = sigma(u) sigma(v)", multiplicativity)

    def graded():
        for w in words:
            img = apply_automorphism(nm, ShriekElement.word(n, w))
            if img.is_zero() or img.degrees() != {w.degree}:
                return f"word {ShriekElement.word(n, w)} maps to {img}"
        return None

    rec.check("graded", "sigma preserves the grading and is bijective per degree", graded)

    def z_eigen():
        try:
            k = nm.z_scalar
        except ValueError as exc:
            return str(exc)
        return None if k != 0 else "sigma(z) = 0"

    rec.check("z-eigenvector", "sigma(z) = k z with k nonzero", z_eigen)

    def z_free_restriction():
        for name, img in nm.images.items():
            if name == "z":
                continue
            if any(w.zflag for w in img.coeffs):
                return f"sigma({name}) = {img} has a z component"
        return None

    rec.check("z-free-restriction", "sigma restricts to the z-free subalgebra", z_free_restriction)

    def golden_regression():
        stored = load_golden(n)
        if stored is None:
            return f"golden file missing for n={n}; generate it with --bless"
        computed = compute_golden(n)
        if stored != computed:
            diffs = [k for k in computed if stored.get(k) != computed[k]]
            return f"golden mismatch in fields {diffs}"
        return None

    rec.check("golden-regression", "Nakayama data matches the blessed golden values", golden_regression)


def _suite_decomposition(rec: _Recorder, n: int, rng: random.Random, budget: int) -> None:
    words = shriek_basis(n)
    from .shriek import multiply as smul

    def parts_sum():
        for w in words:
            e = ShriekElement.word(n, w)
            c, zp = decompose(e)
            if c + zp != e:
                return f"word {e}"
        for _ in range(budget):
            e = random_shriek(rng, n)
            c, zp = decompose(e)
            if c + zp != e:
                return f"element {e}"
        return None

    rec.check("parts-sum", "B! = (z-free part) + (z part)", parts_sum)

    def idempotent():
        for _ in range(budget):
            e = random_shriek(rng, n)
            c, zp = decompose(e)
            if decompose(c) != (c, ShriekElement.zero(n)) or decompose(zp) != (
                ShriekElement.zero(n),
                zp,
            ):
                return f"element {e}"
        return None

    rec.check("projection-idempotent", "both projections are idempotent", idempotent)

    def subalgebra_closure():
        zfree = [w for w in words if w.zflag == 0]
        for u in zfree:
            for v in zfree:
                prod = smul(ShriekElement.word(n, u), ShriekElement.word(n, v))
                if any(w.zflag for w in prod.coeffs):
                    return f"{ShriekElement.word(n, u)} * {ShriekElement.word(n, v)} = {prod}"
        return None

    rec.check("subalgebra-closure", "the z-free words form a closed subalgebra", subalgebra_closure)

    def dimensions():
        zfree = sum(1 for w in words if w.zflag == 0)
        zfull = len(words) - zfree
        want = 2 ** (2 * n)
        return None if zfree == zfull == want else f"{zfree}, {zfull}"

    rec.check("rank-two-dimensions", "both summands have dimension 2^(2n)", dimensions)

    def z_span_change_of_basis():
        zel = ShriekElement.generator(n, Generator.z())
        seen = {}
        for u in words:
            if u.zflag:
                continue
            img = smul(zel, ShriekElement.word(n, u))
            if len(img.coeffs) != 1:
                return f"z * {ShriekElement.word(n, u)} is not a signed word: {img}"
            w, c = next(iter(img.coeffs.items()))
            if w.zflag != 1 or c not in (1, -1):
                return f"z * {ShriekElement.word(n, u)} = {img}"
            seen[w] = c
        want = {w for w in words if w.zflag == 1}
        if set(seen) != want:
            return "left multiplication by z misses part of the z span"
        return None

    rec.check(
        "z-span-change-of-basis",
        "z * (z-free basis) hits each z word exactly once, up to sign",
        z_span_change_of_basis,
    )

    def bimodule_closure():
        zfree = [w for w in words if w.zflag == 0]
        zwords = [w for w in words if w.zflag == 1]
        for _ in range(budget):
            c = ShriekElement.word(n, rng.choice(zfree))
            w = ShriekElement.word(n, rng.choice(zwords))
            for prod in (smul(c, w), smul(w, c)):
                if any(t.zflag == 0 for t in prod.coeffs):
                    return f"c = {c}; w = {w}; product {prod}"
        return None

    rec.check("bimodule-closure", "multiplication by z-free elements preserves the z span", bimodule_closure)


def _suite_localization(rec: _Recorder, n: int, rng: random.Random, budget: int) -> None:
    B, A = AlgebraKind.B, AlgebraKind.A

    def ring_hom():
        for _ in range(budget):
            a = random_element(rng, B, n)
            b = random_element(rng, B, n)
            if loc.dehomogenize(multiply(a, b)) != multiply(loc.dehomogenize(a), loc.dehomogenize(b)):
                return f"a = {a}; b = {b}"
            if loc.dehomogenize(a + b) != loc.dehomogenize(a) + loc.dehomogenize(b):
                return f"additivity: a = {a}; b = {b}"
        return None

    rec.check(
        "dehomogenize-ring-hom", "z -> 1 is a ring homomorphism onto the Weyl algebra", ring_hom
    )

    def kernel_characterization():
        zminus1 = AlgebraElement.generator(B, n, Generator.z()) - AlgebraElement.one(B, n)
        for _ in range(budget):
            w = random_element(rng, B, n, nonzero=True)
            b = multiply(zminus1, w)
            got = loc.kernel_witness(b)
            if got is None or multiply(zminus1, got) != b:
                return f"constructed kernel element {b}"
            a = random_element(rng, B, n, nonzero=True)
            if loc.dehomogenize(a).is_zero() != (loc.kernel_witness(a) is not None):
                return f"characterization fails on {a}"
        return None

    rec.check("kernel-characterization", "ker(z -> 1) = (z - 1) B", kernel_characterization)

    def round_trips():
        for _ in range(budget):
            a = random_element(rng, A, n, max_partial=6)
            hb, k = loc.homogenize(a)
            if loc.dehomogenize(hb) != a:
                return f"a = {a}"
            if not a.is_zero():
                if not hb.is_homogeneous() or graded_degree(hb) != k:
                    return f"homogenize({a}) is not homogeneous of degree {k}"
        return None

    rec.check("round-trip-dehom-homog", "dehomogenize(homogenize(a)) = a", round_trips)

    def fraction_laws():
        for _ in range(budget):
            a = loc.make(random_element(rng, B, n), rng.randint(0, 3))
            b = loc.make(random_element(rng, B, n), rng.randint(0, 3))
            if not loc.loc_equals(a, a):
                return f"reflexivity fails on {a}"
            if loc.loc_equals(a, b) != loc.loc_equals(b, a):
                return f"symmetry fails on {a}, {b}"
            # well-definedness: z^t a / z^(k+t) is the same fraction
            t = rng.randint(1, 3)
            a_rep = loc.LocalizedElement(z_shift(a.numerator, t), a.zpow + t)
            if not loc.loc_equals(a, a_rep):
                return f"scaled representative not equal: {a}"
            if not loc.loc_equals(loc.loc_add(a_rep, b), loc.loc_add(a, b)):
                return f"sum not well defined: {a}, {b}"
            if not loc.loc_equals(loc.loc_multiply(a_rep, b), loc.loc_multiply(a, b)):
                return f"product not well defined: {a}, {b}"
        return None

    rec.check("fraction-laws", "cross-multiplication equality is a congruence", fraction_laws)

    def theta_iso():
        for _ in range(budget):
            a = random_element(rng, A, n, max_partial=6)
            if loc.theta(loc.theta_inverse(a)) != a:
                return f"round trip fails on {a}"
            b = random_element(rng, A, n)
            e = loc.theta_inverse(a)
            f = loc.theta_inverse(b)
            if loc.theta(loc.loc_multiply(e, f)) != multiply(a, b):
                return f"multiplicativity fails on {a}, {b}"
            if loc.theta(loc.loc_add(e, f)) != a + b:
                return f"additivity fails on {a}, {b}"
        return None

    rec.check(
        "theta-isomorphism",
        "theta: degree-zero part -> Weyl algebra is a ring isomorphism",
        theta_iso,
    )

    def mu_multiplicative():
        for _ in range(budget):
            a = random_element(rng, A, n)
            b = random_element(rng, A, n)
            s, t = rng.randint(-3, 3), rng.randint(-3, 3)
            lhs = loc.loc_multiply(loc.mu(a, s), loc.mu(b, t))
            rhs = loc.mu(multiply(a, b), s + t)
            if lhs != rhs:
                return f"a = {a}; b = {b}; s = {s}; t = {t}"
        return None

    rec.check("mu-multiplicative", "mu(a,s) mu(b,t) = mu(ab, s+t)", mu_multiplicative)

    def degree_additivity():
        for _ in range(budget):
            da, db = rng.randint(0, 3), rng.randint(0, 3)
            a = loc.make(random_homogeneous(rng, B, n, da), rng.randint(0, 3))
            b = loc.make(random_homogeneous(rng, B, n, db), rng.randint(0, 3))
            if a.is_zero() or b.is_zero():
                continue
            p = loc.loc_multiply(a, b)
            if p.degree() != a.degree() + b.degree():
                return f"a = {a}; b = {b}; product {p}"
        return None

    rec.check("degree-additivity", "degrees of homogeneous fractions add", degree_additivity)

    def z_torsion_free():
        from .pbw import divide_by_z, z_divides

        for _ in range(budget):
            a = random_element(rng, B, n, nonzero=True)
            k = rng.randint(1, 3)
            if z_shift(a, k).is_zero():
                return f"z^{k} kills {a}"
            b = z_shift(a, k)
            for _ in range(k):
                if not z_divides(b):
                    return f"z divisibility bookkeeping broke on {a}"
                b = divide_by_z(b)
            if b != a:
                return f"divide_by_z does not invert z multiplication on {a}"
        return None

    rec.check(
        "z-torsion-free",
        "no z torsion at element level: z^k a = 0 only for a = 0",
        z_torsion_free,
    )


def _suite_roundtrip(rec: _Recorder, n: int, rng: random.Random, budget: int) -> None:
    def pbw_roundtrip():
        for _ in range(budget):
            kind = rng.choice([AlgebraKind.A, AlgebraKind.B, AlgebraKind.C])
            e = random_element(rng, kind, n)
            text = render(e, "text")
            back = normal_form(parse(text, n, kind), kind)
            if back != e:
                return f"{text} -> {back}"
        return None

    rec.check("parse-render-pbw", "parse after render recovers every canonical element", pbw_roundtrip)

    def shriek_roundtrip():
        if n > 2:
            return None
        for _ in range(budget):
            kind = rng.choice([AlgebraKind.B_SHRIEK, AlgebraKind.C_SHRIEK])
            e = ShriekElement(n, random_shriek(rng, n).coeffs, kind)
            text = render(e, "text")
            back = reduce_expression(parse(text, n, kind), kind)
            if back != e:
                return f"{text} -> {back}"
        return None

    rec.check("parse-render-shriek", "round trip through text for shriek elements", shriek_roundtrip)

    def injectivity():
        seen: dict[str, AlgebraElement] = {}
        for _ in range(budget):
            e = random_element(rng, AlgebraKind.B, n)
            text = render(e, "text")
            if text in seen and seen[text] != e:
                return f"two canonical elements render to {text}"
            seen[text] = e
        return None

    rec.check("render-injective", "distinct canonical elements render differently", injectivity)

    def json_shape():
        e = random_element(rng, AlgebraKind.B, n, nonzero=True)
        doc = json.loads(render(e, "json"))
        for key in ("algebra", "n", "terms"):
            if key not in doc:
                return f"missing key {key}"
        for t in doc["terms"]:
            for key in ("coeff", "z", "x", "d"):
                if key not in t:
                    return f"missing term key {key}"
            if len(t["x"]) != n or len(t["d"]) != n:
                return "wrong exponent vector length"
        return None

    rec.check("json-shape", "JSON form carries algebra, n and canonical terms", json_shape)


_SUITES: dict[str, tuple[Callable[[_Recorder, int, random.Random, int], None], int]] = {
    "pbw-laws": (_suite_pbw_laws, 3),
    "center": (_suite_center, 3),
    "dual-orthogonality": (_suite_dual, 3),
    "shriek-dims": (_suite_shriek_dims, 3),
    "frobenius": (_suite_frobenius, 2),
    "nakayama": (_suite_nakayama, 2),
    "decomposition": (_suite_decomposition, 2),
    "localization": (_suite_localization, 3),
    "roundtrip": (_suite_roundtrip, 3),
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, n: int, seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Run one named suite for every pair count 1..n, deterministically.

    The sample stream depends only on (seed, suite name, pair count), so
    identical arguments reproduce identical check outcomes.
    """
    if name not in _SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    fn, max_n = _SUITES[name]
    if n < 1 or n > max_n:
        raise UnsupportedN(f"suite {name} supports 1 <= n <= {max_n}, got {n}")
    if budget < 1:
        raise ValueError("budget must be positive")
    n_values = list(range(1, n + 1))
    report = SuiteReport(suite_name=name, n_range=n_values)
    share = max(budget // len(n_values), 1)
    for ni in n_values:
        rng = random.Random(f"{name}:{seed}:{ni}")
        fn(_Recorder(report, ni), ni, rng, share)
    return report


# -- golden values -----------------------------------------------------------------

def golden_dir() -> Path:
    override = os.environ.get("WEYLKIT_GOLDEN_DIR")
    if override:
        return Path(override)
    return Path(__file__).parent / "golden"


def golden_path(n: int) -> Path:
    return golden_dir() / f"shriek_n{n}.json"


def compute_golden(n: int) -> dict:
    """Golden data for one n: dims, Gram determinants, Nakayama images, scalar.

    The Nakayama images come from the exact linear solve and are
    cross-checked against the defining identity on all basis pairs before
    being reported, so a blessed file is itself verified oracle output.
    """
    nm = nakayama(n)
    words = shriek_basis(n)
    for wa in words:
        for wb in words:
            a = ShriekElement.word(n, wa)
            b = ShriekElement.word(n, wb)
            if bilinear_form(apply_automorphism(nm, a), b) != bilinear_form(b, a):
                raise AssertionError(f"defining identity fails at ({a}, {b}); refusing to bless")
    dets = [linalg.det(gram_matrix(n, j)) for j in range(2 * n + 2)]
    return {
        "n": n,
        "degree_dimensions": degree_dimensions(n),
        "gram_determinants": [f"{d.numerator}/{d.denominator}" for d in dets],
        "nakayama_images": {name: render(img, "json") for name, img in sorted(nm.images.items())},
        "nakayama_z_scalar": f"{nm.z_scalar.numerator}/{nm.z_scalar.denominator}",
    }


def bless_golden(n: int) -> Path:
    path = golden_path(n)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(compute_golden(n), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def load_golden(n: int) -> dict | None:
    path = golden_path(n)
    if not path.exists():
        return None
    with open(path) as fh:
        return json.load(fh)
