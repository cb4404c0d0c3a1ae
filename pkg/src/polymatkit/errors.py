"""Exception hierarchy for polymatkit.

All library errors derive from PolymatError so callers can catch one base
class. The CLI maps these onto process exit codes.
"""


class PolymatError(Exception):
    """Base class for all polymatkit errors."""


# -- field / polynomial layer ------------------------------------------------

class ZeroInverse(PolymatError):
    """Multiplicative inverse of zero requested."""


class UnsupportedOrder(PolymatError):
    """Requested root-of-unity order not available in this field."""


class DuplicateAbscissa(PolymatError):
    """Interpolation points share an abscissa."""


class FieldTooSmall(PolymatError):
    """The prime is too small for the requested evaluation-based routine."""


# -- matrix layer ------------------------------------------------------------

class DimensionMismatch(PolymatError):
    """Operand shapes are incompatible."""


class ZeroRow(PolymatError):
    """A row-degree based predicate met an identically zero row."""


class NotSquare(PolymatError):
    """A square matrix was required."""


class SingularInput(PolymatError):
    """The input matrix is singular where a non-singular one is required."""


class SingularAtZero(PolymatError):
    """A(0) is singular; expansion at x=0 is impossible without a shift."""


# -- approximant / nullspace layer -------------------------------------------

class OrderExceedsData(PolymatError):
    """Requested approximation order exceeds the stored series order."""


class RankDeficient(PolymatError):
    """A full-column-rank precondition failed."""


class RetriesExhausted(PolymatError):
    """A Las Vegas routine gave up after its retry budget."""


class CapTooSmall(PolymatError):
    """Brute-force nullspace degree cap below the largest Kronecker index."""


# -- fraction / solver layer -------------------------------------------------

class NonPolynomialQuotient(PolymatError):
    """An exact polynomial division left a remainder (internal bug guard)."""


class WrongRowCount(PolymatError):
    """Fraction reconstruction found an unexpected number of low-degree rows."""


class ReconstructionFailure(PolymatError):
    """Row reduction could not reconstruct the fraction."""


class NotPowerOfTwo(PolymatError):
    """The generic inverse/determinant recursion needs n to be a power of two."""


class GenericityFailure(PolymatError):
    """A recursion round did not show the generic degree pattern."""


# -- CLI / serialization -----------------------------------------------------

class ParseError(PolymatError):
    """Malformed polymat text file."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class PrimeMismatch(PolymatError):
    """Operands were read from files over different primes."""
