"""Exception types. Every error carries a short machine-readable ``code``."""


class ToricError(ValueError):
    code = "domain"

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.message = message
        self.detail = detail

    def as_dict(self):
        return {"code": self.code, "message": self.message, "detail": self.detail}


class InvalidPolytopeError(ToricError):
    code = "invalid-polytope"


class InvalidDicharacteristicError(ToricError):
    code = "invalid-dichar"


class DimensionMismatchError(ToricError):
    code = "dimension-mismatch"


class DegenerateDimensionError(ToricError):
    code = "degenerate-dim-1"


class NotUnimodularError(ToricError):
    code = "not-unimodular"


class UnknownFacetError(ToricError):
    code = "unknown-facet"


class InvalidFaceError(ToricError):
    code = "invalid-face"


class InvariantViolation(ToricError):
    """Raised when an internal invariant fails; indicates a bug or bad input data."""

    code = "invariant"
