"""Exception hierarchy. Every error carries a machine-readable ``code``."""


class NatbinError(Exception):
    code = "error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class DimensionMismatch(NatbinError, ValueError):
    code = "dimension_mismatch"


class UnboundedPolyhedron(NatbinError, ValueError):
    code = "unbounded_polyhedron"


class PointNotInPolytope(NatbinError, ValueError):
    code = "point_not_in_polytope"


class RangeViolation(NatbinError, ValueError):
    code = "range_violation"


class NotBijective(NatbinError, ValueError):
    code = "not_bijective"


class NotABinarization(NatbinError, ValueError):
    code = "not_a_binarization"

    def __init__(self, message, missing=(), extra=()):
        super().__init__(message)
        self.missing = tuple(missing)
        self.extra = tuple(extra)

    def to_json(self) -> dict:
        out = super().to_json()
        out["missing"] = [str(x) for x in self.missing]
        out["extra"] = [str(x) for x in self.extra]
        return out


class NonNaturalBinarization(NatbinError, ValueError):
    code = "non_natural_binarization"


class RangeMismatch(NatbinError, ValueError):
    code = "range_mismatch"


class SizeLimitExceeded(NatbinError, RuntimeError):
    code = "size_limit_exceeded"


class NoWitness(NatbinError, AssertionError):
    """A vertex of Q admits no face/fixing witness. Signals a theorem violation."""

    code = "no_witness"


class PersistencyViolation(NatbinError, AssertionError):
    code = "persistency_violation"


class InfeasibleRow(NatbinError, ValueError):
    code = "infeasible_row"


class NonPositiveH(NatbinError, ValueError):
    code = "non_positive_h"


class TheoremViolation(NatbinError, AssertionError):
    code = "theorem_violation"
