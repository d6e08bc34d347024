"""Custom exceptions for modplab."""

from typing import Any, List, Optional


class ModpLabError(Exception):
    """Base exception for modplab errors."""
    pass


class ParameterError(ModpLabError):
    """Invalid user-supplied parameters."""
    pass


class ProfileRangeError(ParameterError):
    """A niveau-1 profile produced some r_i outside [0, e*r]."""

    def __init__(self, message: str, index: int, value: int):
        super().__init__(message)
        self.index = index
        self.value = value

    def __reduce__(self):
        return (type(self), (str(self), self.index, self.value))


class GeneratorFileError(ParameterError):
    """Error reading or validating a generator file."""
    pass


class PreconditionError(ModpLabError):
    """A lemma's precondition does not hold for the supplied data."""

    def __init__(
        self, message: str, failed: Optional[List[str]] = None, witness: Any = None
    ):
        super().__init__(message)
        self.failed = failed or []
        self.witness = witness

    def __reduce__(self):
        return (type(self), (str(self), self.failed, self.witness))


class HomomorphismError(PreconditionError):
    """Generator images do not define a homomorphism."""
    pass


class ResourceCapError(ModpLabError):
    """An explicit resource cap was hit."""

    def __init__(self, message: str, reached: int, cap: int):
        super().__init__(message)
        self.reached = reached
        self.cap = cap

    def __reduce__(self):
        return (type(self), (str(self), self.reached, self.cap))


class CapExceededError(ResourceCapError):
    """Group closure grew past the configured element cap."""
    pass


class BudgetExceededError(ResourceCapError):
    """Exhaustive enumeration exceeded the instance budget."""
    pass


class InvariantError(ModpLabError):
    """Internal invariant violated."""
    pass


class ReducibleInductionWarning(UserWarning):
    """A monomial induction was built from a shift-invariant character."""
    pass
