"""Exception types raised by the verification library."""


class MinkowskiError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(MinkowskiError, ValueError):
    pass


class NotHermitian(MinkowskiError, ValueError):
    pass


class NoConvergence(MinkowskiError, ArithmeticError):
    pass


class NotPositiveSemidefinite(MinkowskiError, ValueError):
    pass


class PartitionTooSmall(MinkowskiError, ValueError):
    pass


class IndexOutOfRange(MinkowskiError, IndexError):
    pass


class NotDensityMatrix(MinkowskiError, ValueError):
    """Raised when a matrix fails one or more density-matrix checks.

    ``failures`` holds the names of the failed checks, drawn from
    ``"hermitian"``, ``"psd"`` and ``"trace"``.
    """

    def __init__(self, failures, detail=""):
        self.failures = tuple(failures)
        labels = {
            "hermitian": "not Hermitian",
            "psd": "not positive semidefinite",
            "trace": "trace is not 1",
        }
        msg = "not a density matrix: " + ", ".join(labels[f] for f in self.failures)
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ExponentOutOfRange(MinkowskiError, ValueError):
    pass


class ShiftInsufficient(MinkowskiError, ValueError):
    pass


class TooManyPermutations(MinkowskiError, ValueError):
    pass


class InvalidGrid(MinkowskiError, ValueError):
    pass


class NotNormalized(MinkowskiError, ValueError):
    pass


class BadRank(MinkowskiError, ValueError):
    pass


class NotAPermutation(MinkowskiError, ValueError):
    pass


class MatrixFormatError(MinkowskiError, ValueError):
    pass
