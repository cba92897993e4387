"""Exception types shared across the toolkit."""


class DdrkitError(Exception):
    """Base class for all toolkit errors."""


class InvalidParameterError(DdrkitError):
    """Space or operation parameters violate a stated constraint."""


class SpaceMismatchError(DdrkitError):
    """A point or point set does not belong to the expected space/family."""


class TooLargeError(DdrkitError):
    """An enumeration or pair loop would exceed its configured cap."""


class DegreeCapacityError(DdrkitError):
    """Requested polynomial degree exceeds what the measure supports."""


class UnsupportedDegreeError(DdrkitError):
    """Closed-form family not implemented at the requested degree."""


class NotAGroupError(DdrkitError):
    """Permutation set is not closed under composition and inverse."""


class NotTransitiveEnoughError(DdrkitError):
    """Group lacks the transitivity degree an operation requires."""


class StrengthError(DdrkitError):
    """Design strength precondition failed (insufficient t or t > N(X))."""


class ToleranceError(DdrkitError):
    """Iterative refinement hit its iteration cap before reaching tol."""


class UnknownKindError(DdrkitError):
    """Unrecognized closed-form bound kind."""


class ParseError(DdrkitError):
    """Input document is malformed; carries path and line context."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}: "
        if line is not None:
            where += f"line {line}: "
        super().__init__(where + message)
