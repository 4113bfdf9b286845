"""Shriek algebra tests: reduction, Frobenius form, Nakayama automorphism."""

import itertools
import random
from fractions import Fraction
from math import comb

import pytest
import sympy

from weylkit import (
    AlgebraKind,
    Generator,
    ShriekElement,
    SizeMismatch,
    apply_automorphism,
    bilinear_form,
    decompose,
    degree_dimensions,
    frobenius_functional,
    gram_matrix,
    nakayama,
    reduce_word,
    shriek_basis,
    shriek_basis_of_degree,
)
from weylkit.shriek import multiply, top_word, rank_generator
from weylkit import linalg
from weylkit.verify import random_shriek

x1, x2 = Generator.x(1), Generator.x(2)
d1, d2 = Generator.d(1), Generator.d(2)
z = Generator.z()


# -- an independent reduction oracle: insertion with signs ------------------------

def _oracle_insert(word, r, n):
    """Insert rank r at the right end of a sorted square-free word and sort."""
    greater = sum(1 for t in word if t > r)
    sign = Fraction((-1) ** greater)
    if r not in word:
        return [(sign, tuple(sorted(word + (r,))))]
    if r != 2 * n:
        return []  # repeated x or d kills the word
    base = tuple(t for t in word if t != 2 * n)
    out = []
    for i in range(n):
        for c1, w1 in _oracle_insert(base, i, n):
            for c2, w2 in _oracle_insert(w1, n + i, n):
                out.append((-sign * c1 * c2, w2))
    return out


def oracle_reduce(gens, n):
    """Reduce a word one generator at a time; independent of the worklist engine."""
    from weylkit.shriek import _shriek_rank, _ranks_to_word

    states = {(): Fraction(1)}
    for g in gens:
        r = _shriek_rank(g, n)
        new = {}
        for word, c in states.items():
            for c2, w2 in _oracle_insert(word, r, n):
                key = w2
                new[key] = new.get(key, Fraction(0)) + c * c2
        states = {w: c for w, c in new.items() if c}
    return ShriekElement(n, {_ranks_to_word(w, n): c for w, c in states.items()})


# -- basis and dimensions -----------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_basis_count_and_dims(n):
    words = shriek_basis(n)
    assert len(words) == 2 ** (2 * n + 1)
    assert len(set(words)) == len(words)
    dims = [len(shriek_basis_of_degree(n, j)) for j in range(2 * n + 2)]
    assert dims == [comb(2 * n, j) + (comb(2 * n, j - 1) if j else 0) for j in range(2 * n + 2)]
    assert dims == degree_dimensions(n)
    assert dims == dims[::-1]


def test_dims_examples():
    assert degree_dimensions(1) == [1, 3, 3, 1]
    assert degree_dimensions(2) == [1, 5, 10, 10, 5, 1]
    assert degree_dimensions(1, AlgebraKind.C_SHRIEK) == [1, 3, 3, 1]


def test_basis_order_n1():
    assert [w.word_str(1) for w in shriek_basis(1)] == [
        "1",
        "x1",
        "d1",
        "z",
        "x1*d1",
        "x1*z",
        "d1*z",
        "x1*d1*z",
    ]


# -- reduction -----------------------------------------------------------------------

def test_reduce_examples():
    assert str(reduce_word([d1, x1], 1)) == "-x1*d1"
    assert str(reduce_word([z, z], 1)) == "-x1*d1"
    assert reduce_word([x1, x1], 1).is_zero()
    assert str(reduce_word([z, x1], 1)) == "-x1*z"
    assert str(reduce_word([z, z], 2)) == "-x1*d1 - x2*d2"


def test_reduce_exterior_kind():
    assert reduce_word([z, z], 1, AlgebraKind.C_SHRIEK).is_zero()
    assert str(reduce_word([d1, x1], 1, AlgebraKind.C_SHRIEK)) == "-x1*d1"


def test_reduce_against_insertion_oracle():
    rng = random.Random(47)
    pool1 = [x1, d1, z]
    pool2 = [x1, x2, d1, d2, z]
    for _ in range(400):
        n = rng.choice([1, 2])
        pool = pool1 if n == 1 else pool2
        word = [rng.choice(pool) for _ in range(rng.randint(0, 6))]
        assert reduce_word(word, n) == oracle_reduce(word, n), word


def test_reduce_confluence_random_orders():
    rng = random.Random(53)
    for _ in range(200):
        n = rng.choice([1, 2])
        pool = [x1, d1, z] if n == 1 else [x1, x2, d1, d2, z]
        word = [rng.choice(pool) for _ in range(rng.randint(0, 6))]
        ref = reduce_word(word, n)
        for _ in range(4):
            assert reduce_word(word, n, rng=rng) == ref


# -- multiplication -------------------------------------------------------------------

def test_multiply_examples():
    a = ShriekElement.generator(1, x1)
    b = ShriekElement.generator(1, d1)
    assert str(multiply(a, b)) == "x1*d1"
    assert multiply(multiply(a, b), a).is_zero()
    zz = multiply(ShriekElement.generator(1, z), ShriekElement.generator(1, z))
    assert str(multiply(zz, ShriekElement.generator(1, z))) == "-x1*d1*z"


def test_multiply_graded():
    rng = random.Random(59)
    for _ in range(100):
        n = rng.choice([1, 2])
        wa = rng.choice(shriek_basis(n))
        wb = rng.choice(shriek_basis(n))
        prod = multiply(ShriekElement.word(n, wa), ShriekElement.word(n, wb))
        if not prod.is_zero():
            assert prod.degrees() == {wa.degree + wb.degree}


def test_multiply_associative_all_triples_n1():
    els = [ShriekElement.word(1, w) for w in shriek_basis(1)]
    for a, b, c in itertools.product(els, repeat=3):
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_multiply_associative_random_n2():
    rng = random.Random(61)
    for _ in range(500):
        a, b, c = (random_shriek(rng, 2) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        multiply(ShriekElement.one(1), ShriekElement.one(2))


# -- decomposition ---------------------------------------------------------------------

def test_decompose_examples():
    e = ShriekElement.generator(1, x1) + reduce_word([x1, z], 1)
    c, zp = decompose(e)
    assert str(c) == "x1" and str(zp) == "x1*z"
    c2, z2 = decompose(reduce_word([z, z], 1))
    assert str(c2) == "-x1*d1" and z2.is_zero()


@pytest.mark.parametrize("n", [1, 2])
def test_decompose_properties(n):
    zero = ShriekElement.zero(n)
    words = shriek_basis(n)
    zfree = [w for w in words if w.zflag == 0]
    assert len(zfree) == 2 ** (2 * n)
    # closure of the z-free subalgebra
    for u in zfree:
        for v in zfree:
            prod = multiply(ShriekElement.word(n, u), ShriekElement.word(n, v))
            assert all(w.zflag == 0 for w in prod.coeffs)
    rng = random.Random(67)
    for _ in range(100):
        e = random_shriek(rng, n)
        c, zp = decompose(e)
        assert c + zp == e
        assert decompose(c) == (c, zero)
        assert decompose(zp) == (zero, zp)


# -- Frobenius form ---------------------------------------------------------------------

def test_frobenius_examples():
    assert frobenius_functional(reduce_word([x1, d1, z], 1)) == 1
    assert frobenius_functional(ShriekElement.generator(1, x1)) == 0
    assert frobenius_functional(reduce_word([z, x1, d1], 1)) == 1


def test_bilinear_form_examples():
    assert bilinear_form(ShriekElement.generator(1, x1), reduce_word([d1, z], 1)) == 1
    assert bilinear_form(ShriekElement.generator(1, x1), ShriekElement.generator(1, x1)) == 0
    assert bilinear_form(ShriekElement.one(1), reduce_word([x1, d1, z], 1)) == 1


def test_gram_examples():
    assert gram_matrix(1, 0) == [[Fraction(1)]]
    g1 = gram_matrix(1, 1)
    assert len(g1) == 3 and linalg.det(g1) != 0
    assert gram_matrix(1, 3) == [[Fraction(1)]]


@pytest.mark.parametrize("n", [1, 2])
def test_gram_invertible_all_degrees(n):
    for j in range(0, 2 * n + 2):
        m = gram_matrix(n, j)
        assert len(m) == len(m[0])  # dimension palindrome
        det = linalg.det(m)
        assert det != 0
        # independent oracle for the determinant
        sdet = sympy.Matrix([[sympy.Rational(v) for v in row] for row in m]).det()
        assert sympy.Rational(det) == sdet


@pytest.mark.parametrize("n", [1, 2])
def test_form_associativity(n):
    words = shriek_basis(n)
    if n == 1:
        triples = itertools.product(words, repeat=3)
    else:
        rng = random.Random(71)
        triples = [(rng.choice(words), rng.choice(words), rng.choice(words)) for _ in range(500)]
    for wa, wb, wc in triples:
        a, b, c = (ShriekElement.word(n, w) for w in (wa, wb, wc))
        assert bilinear_form(multiply(a, b), c) == bilinear_form(a, multiply(b, c))


# -- Nakayama automorphism -----------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2])
def test_nakayama_defining_identity(n):
    nm = nakayama(n)
    words = shriek_basis(n)
    for wa in words:
        for wb in words:
            a = ShriekElement.word(n, wa)
            b = ShriekElement.word(n, wb)
            assert bilinear_form(apply_automorphism(nm, a), b) == bilinear_form(b, a)


@pytest.mark.parametrize("n", [1, 2])
def test_nakayama_z_scalar(n):
    nm = nakayama(n)
    k = nm.z_scalar
    assert k != 0
    zel = ShriekElement.generator(n, z)
    assert apply_automorphism(nm, zel) == zel.scaled(k)


@pytest.mark.parametrize("n", [1, 2])
def test_nakayama_z_free_restriction(n):
    nm = nakayama(n)
    for name, img in nm.images.items():
        if name != "z":
            assert all(w.zflag == 0 for w in img.coeffs)


def test_nakayama_multiplicative_n1_all_pairs():
    nm = nakayama(1)
    words = shriek_basis(1)
    for wa, wb in itertools.product(words, repeat=2):
        a, b = ShriekElement.word(1, wa), ShriekElement.word(1, wb)
        assert apply_automorphism(nm, multiply(a, b)) == multiply(
            apply_automorphism(nm, a), apply_automorphism(nm, b)
        )


def test_nakayama_multiplicative_n2_random():
    nm = nakayama(2)
    rng = random.Random(73)
    for _ in range(500):
        a, b = random_shriek(rng, 2), random_shriek(rng, 2)
        assert apply_automorphism(nm, multiply(a, b)) == multiply(
            apply_automorphism(nm, a), apply_automorphism(nm, b)
        )


def test_apply_examples():
    nm = nakayama(1)
    one = ShriekElement.one(1)
    assert apply_automorphism(nm, one) == one
    zel = ShriekElement.generator(1, z)
    k = nm.z_scalar
    assert apply_automorphism(nm, multiply(zel, zel)) == multiply(zel, zel).scaled(k * k)
    top = ShriekElement.word(1, top_word(1))
    img = apply_automorphism(nm, top)
    assert set(img.coeffs) == {top_word(1)}


def test_apply_size_mismatch():
    nm = nakayama(1)
    with pytest.raises(SizeMismatch):
        apply_automorphism(nm, ShriekElement.one(2))


def test_rank_generator_roundtrip():
    for n in (1, 2, 3):
        for r in range(2 * n + 1):
            g = rank_generator(r, n)
            from weylkit.shriek import _shriek_rank

            assert _shriek_rank(g, n) == r
