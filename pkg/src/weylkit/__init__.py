"""weylkit: exact arithmetic in the homogenized Weyl algebra and its Koszul dual.

The kernel covers three PBW-based algebras (the Weyl algebra ``A``, its
homogenization ``B``, the polynomial algebra ``C``), the finite-dimensional
duals ``B!`` and ``C!`` with their Frobenius/Nakayama structure, and the
graded localization of ``B`` at z with the maps identifying its degree-zero
part with ``A``.  All coefficients are exact rationals.
"""

from .errors import (
    IllegalGenerator,
    IndexOutOfRange,
    KindMismatch,
    NotDegreeZero,
    NotDivisible,
    ParseError,
    RankDeficientInput,
    SingularGram,
    SizeMismatch,
    UnknownSuite,
    UnsupportedN,
    WeylkitError,
    ZeroElement,
)
from .generators import AlgebraKind, FreeExpression, Generator
from .expressions import parse, render
from .pbw import (
    AlgebraElement,
    PBWMonomial,
    add,
    basis_of_degree,
    centralizer_in_degree,
    commutator,
    divide_by_z,
    graded_component,
    graded_degree,
    multiply,
    normal_form,
    partial_degree,
    scale,
    word_normal_form,
    z_divides,
    z_shift,
)
from .quadratic import (
    DualRelationBasis,
    QuadraticPresentation,
    dual_presentation,
    orthogonal_complement,
    pairing,
    relations_of,
)
from .shriek import (
    NakayamaMap,
    ShriekElement,
    ShriekWord,
    apply_automorphism,
    bilinear_form,
    decompose,
    degree_dimensions,
    frobenius_functional,
    gram_matrix,
    nakayama,
    reduce_expression,
    reduce_word,
    shriek_basis,
    shriek_basis_of_degree,
)
from .localization import (
    LocalizedElement,
    dehomogenize,
    homogenize,
    kernel_witness,
    loc_add,
    loc_equals,
    loc_multiply,
    make,
    mu,
    theta,
    theta_inverse,
)
from .verify import SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AlgebraKind",
    "DualRelationBasis",
    "FreeExpression",
    "Generator",
    "IllegalGenerator",
    "IndexOutOfRange",
    "KindMismatch",
    "LocalizedElement",
    "NakayamaMap",
    "NotDegreeZero",
    "NotDivisible",
    "ParseError",
    "PBWMonomial",
    "QuadraticPresentation",
    "RankDeficientInput",
    "ShriekElement",
    "ShriekWord",
    "SingularGram",
    "SizeMismatch",
    "SuiteReport",
    "UnknownSuite",
    "UnsupportedN",
    "WeylkitError",
    "ZeroElement",
    "add",
    "apply_automorphism",
    "basis_of_degree",
    "bilinear_form",
    "centralizer_in_degree",
    "commutator",
    "decompose",
    "degree_dimensions",
    "dehomogenize",
    "divide_by_z",
    "dual_presentation",
    "frobenius_functional",
    "graded_component",
    "graded_degree",
    "gram_matrix",
    "homogenize",
    "kernel_witness",
    "loc_add",
    "loc_equals",
    "loc_multiply",
    "make",
    "mu",
    "multiply",
    "nakayama",
    "normal_form",
    "orthogonal_complement",
    "pairing",
    "parse",
    "partial_degree",
    "reduce_expression",
    "reduce_word",
    "relations_of",
    "render",
    "run_suite",
    "scale",
    "shriek_basis",
    "shriek_basis_of_degree",
    "theta",
    "theta_inverse",
    "word_normal_form",
    "z_divides",
    "z_shift",
]
