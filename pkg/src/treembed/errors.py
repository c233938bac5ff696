"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: usage errors exit 2
(argparse), DomainError and subclasses exit 3, BudgetError exits 4.
"""


class TreeParseError(ValueError):
    """Malformed tree or forest literal. Carries the character offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class DomainError(ValueError):
    """Input outside an operation's domain (bad size, degree, range...)."""


class UnsupportedFamilyError(DomainError):
    """The requested host family is not supported by this operation."""


class UnsupportedExactError(DomainError):
    """No exact engine for this input; use the oracle or asymptotics."""


class UndefinedProbabilityError(DomainError):
    """Conditioning event has probability zero (all-embedding count is 0)."""


class BudgetError(RuntimeError):
    """A resource guard tripped (enumeration cap or subset-iteration budget)."""


class NumericError(RuntimeError):
    """A numeric routine failed to converge; carries the last residuals."""

    def __init__(self, message: str, residuals=None):
        super().__init__(message)
        self.residuals = residuals
