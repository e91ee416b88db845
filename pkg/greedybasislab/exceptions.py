class GreedyBasisLabError(Exception):
    """Base exception for all greedybasislab-related errors."""
    pass

class InstanceError(GreedyBasisLabError):
    """Raised when an analysis instance is invalid."""
    pass

class DimensionMismatchError(InstanceError):
    """Raised when a vector or matrix does not match the space dimension."""
    def __init__(self, expected, actual, message=None):
        """
        :param expected: The dimension required by the space or basis.
        :param actual: The dimension that was supplied.
        :param message: Optional custom message.
        """
        self.expected = expected
        self.actual = actual
        self.message = message or (
            f"Dimension mismatch: expected {expected}, got {actual}."
        )
        super().__init__(self.message)

class InstanceSchemaError(InstanceError):
    """Raised when an instance file fails to parse or violates the schema."""
    def __init__(self, field, reason, line=None, column=None, source=None):
        """
        :param field: Dotted path of the offending field (e.g. 'norm.p').
        :param reason: What is wrong with the field.
        :param line: Line number in the source file, if known.
        :param column: Column number in the source file, if known.
        :param source: Path of the instance file, if known.
        """
        self.field = field
        self.reason = reason
        self.line = line
        self.column = column
        self.source = source
        location = source or '<instance>'
        if line is not None:
            location += f":{line}:{column}"
        self.message = f"{location}: field '{field}': {reason}"
        super().__init__(self.message)

class NormSpecError(InstanceError):
    """Raised when a norm specification is rejected by validation."""
    def __init__(self, report):
        self.report = report
        self.message = "Invalid norm specification: " + "; ".join(report.failures)
        super().__init__(self.message)

class BasisConstructionError(GreedyBasisLabError):
    """Raised when a basis matrix is singular or too ill-conditioned to invert."""
    def __init__(self, condition_number, bound, message=None):
        self.condition_number = condition_number
        self.bound = bound
        self.message = message or (
            f"Basis matrix is singular or ill-conditioned: condition number "
            f"{condition_number:.3e} exceeds the bound {bound:.1e}."
        )
        super().__init__(self.message)

class ContractError(GreedyBasisLabError):
    """Raised when an operation precondition is violated."""
    pass

class DimensionGuardError(GreedyBasisLabError):
    """Raised when a subset enumeration would exceed the configured dimension cap."""
    def __init__(self, dim, cap, operation):
        self.dim = dim
        self.cap = cap
        self.operation = operation
        self.message = (
            f"{operation} enumerates all 2^n coordinate subsets and is capped at "
            f"n <= {cap}; got n = {dim}."
        )
        super().__init__(self.message)

class EigenSolverError(GreedyBasisLabError):
    """Raised when the generalized symmetric eigensolver fails."""
    pass
