"""Exception types shared across the package."""


class HermitiaError(ValueError):
    """A precondition on the mathematical input failed.

    ``code`` is a short machine-readable identifier (used by the CLI).
    """

    def __init__(self, code: str, message: str = ""):
        super().__init__(message or code)
        self.code = code


class DimensionError(HermitiaError):
    def __init__(self, message: str):
        super().__init__("dimension-mismatch", message)


class SingularMatrixError(HermitiaError):
    def __init__(self, message: str = "matrix is singular"):
        super().__init__("singular-matrix", message)


class ParseError(ValueError):
    """Malformed exact-scalar or document syntax."""
