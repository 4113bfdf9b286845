"""Exception types shared across the kernel."""


class WeylkitError(Exception):
    """Base class for all weylkit errors."""


class ParseError(WeylkitError):
    """Raised on malformed input text; carries position and expected tokens."""

    def __init__(self, position, expected, found=None):
        self.position = position
        self.expected = sorted(expected)
        self.found = found
        what = repr(found) if found is not None else "end of input"
        super().__init__(
            f"syntax error at position {position}: found {what}, "
            f"expected one of {', '.join(self.expected)}"
        )


class IndexOutOfRange(WeylkitError):
    """Variable index exceeds the pair count n."""


class IllegalGenerator(WeylkitError):
    """Generator not legal for the target algebra (z in the plain Weyl algebra)."""


class KindMismatch(WeylkitError):
    """Operands live in different algebras or have different pair counts."""


class SizeMismatch(WeylkitError):
    """Operands have different pair counts n."""


class ZeroElement(WeylkitError):
    """Degree query on the zero element."""


class NotDivisible(WeylkitError):
    """Element is not divisible by z."""


class RankDeficientInput(WeylkitError):
    """Relation list is linearly dependent."""


class SingularGram(WeylkitError):
    """A Gram matrix of the Frobenius form came out singular (implementation bug)."""


class NotDegreeZero(WeylkitError):
    """Localized element is not a homogeneous degree-zero fraction."""


class UnknownSuite(WeylkitError):
    """No verification suite with that name."""


class UnsupportedN(WeylkitError):
    """Pair count exceeds the resource guard for this operation."""
