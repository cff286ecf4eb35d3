"""Exception hierarchy shared by every module of the package."""


class MatGrowthError(Exception):
    """Base class for all package errors."""


class InputError(MatGrowthError, ValueError):
    """Raised for malformed user input (maps to CLI exit status 2)."""


class NonSquare(InputError):
    pass


class NegativeEntry(InputError):
    def __init__(self, row, col, value, matrix=None):
        self.row, self.col, self.value, self.matrix = row, col, value, matrix
        where = f"matrix {matrix}, " if matrix is not None else ""
        super().__init__(f"negative entry {value} at {where}row {row}, col {col}")


class DimensionMismatch(InputError):
    pass


class EmptySet(InputError):
    pass


class EmptySubset(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class NoEdges(InputError):
    pass


class PreconditionViolated(MatGrowthError):
    """An operation was called outside the regime it is defined for."""


class InternalInconsistency(MatGrowthError):
    """A structural fact guaranteed by theory did not hold (CLI exit status 3)."""


class CycleDetected(InternalInconsistency):
    pass


class BudgetExceeded(MatGrowthError):
    def __init__(self, budget, message=None):
        self.budget = budget
        super().__init__(message or f"enumeration budget of {budget} products exceeded")
