"""Exception hierarchy.  ``code`` is the token printed by the CLI."""


class RectileError(Exception):
    code = "error"
    exit_code = 2


class InputError(RectileError):
    code = "input"
    exit_code = 2


class NotRectilinear(InputError):
    code = "not-rectilinear"


class NotSimple(InputError):
    code = "not-simple"


class ZeroLengthEdge(InputError):
    code = "zero-length-edge"


class IrrationalCoordinate(InputError):
    code = "irrational-coordinate"


class RectNotInside(InputError):
    code = "rect-not-inside"


class RectNotBoundaryAttached(InputError):
    code = "rect-not-boundary-attached"


class BoundaryWordNotTrivial(InputError):
    code = "boundary-word-not-trivial"


class PathInconsistent(InputError):
    code = "path-inconsistent"


class NonIntegerEdge(InputError):
    code = "non-integer-edge"


class UnsupportedLattice(InputError):
    code = "unsupported-lattice"


class DifferentRegions(InputError):
    code = "different-regions"


class IllegalMove(InputError):
    code = "illegal-move"


class NoInteriorMax(InputError):
    code = "no-interior-max"


class BudgetExceeded(InputError):
    code = "budget-exceeded"


class CapExceeded(InputError):
    code = "cap-exceeded"

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial or []


class InternalInvariant(RectileError):
    """An assertion the algorithm relies on did not hold."""

    code = "internal"
    exit_code = 3


class MaxEdgeNotInteger(InternalInvariant):
    code = "max-edge-not-integer"


class ContactNotInteger(InternalInvariant):
    code = "contact-not-integer"


class NormalizationFailed(InternalInvariant):
    code = "normalization-failed"
