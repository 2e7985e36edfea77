"""Exception hierarchy. Every error carries a short machine-readable code."""


class GaugenormError(Exception):
    """Base class for all library errors."""

    code = "error"


class SingularMatrix(GaugenormError):
    code = "singular_matrix"


class ZeroRadicand(GaugenormError):
    code = "zero_radicand"


class NonConvergence(GaugenormError):
    code = "non_convergence"


class DimensionMismatch(GaugenormError):
    code = "dimension_mismatch"


class SingularConstantTerm(GaugenormError):
    code = "singular_constant_term"


class NotRegularNilpotent(GaugenormError):
    code = "not_regular_nilpotent"


class OrderTooSmall(GaugenormError):
    code = "order_too_small"


class LengthMismatch(GaugenormError):
    code = "length_mismatch"


class ZeroLeadingEntry(GaugenormError):
    code = "zero_leading_entry"


class DegenerateSlope(GaugenormError):
    code = "degenerate_slope"


class NotEisenstein(GaugenormError):
    code = "not_eisenstein"


class InvalidWeights(GaugenormError):
    code = "invalid_weights"


class DegenerateFit(GaugenormError):
    code = "degenerate_fit"


class DocumentError(GaugenormError):
    """Malformed input document (bad JSON shape, unparsable number strings)."""

    code = "parse_error"
