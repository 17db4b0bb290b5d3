"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class ArfError(Exception):
    code = "error"


class ParseError(ArfError, ValueError):
    code = "parse_error"


class ReducibleModulus(ArfError, ValueError):
    code = "reducible_modulus"


class ZeroInverse(ArfError, ZeroDivisionError):
    code = "zero_inverse"


class LevelCapExceeded(ArfError, ValueError):
    code = "level_cap_exceeded"


class DegreeCapExceeded(ArfError, ValueError):
    code = "degree_cap_exceeded"


class DimensionMismatch(ArfError, ValueError):
    code = "dimension_mismatch"


class ContextMismatch(ArfError, ValueError):
    code = "context_mismatch"


class InvalidForm(ArfError, ValueError):
    code = "invalid_form"


class SingularMatrix(ArfError, ValueError):
    code = "singular_matrix"


class DegenerateForm(ArfError, ValueError):
    code = "degenerate_form"


class NotALagrangian(ArfError, ValueError):
    code = "not_a_lagrangian"


class DecompositionFailed(ArfError, RuntimeError):
    code = "decomposition_failed"


class BudgetExceeded(ArfError, RuntimeError):
    code = "budget_exceeded"


class InconsistentInvariant(ArfError, RuntimeError):
    code = "inconsistent_invariant"
