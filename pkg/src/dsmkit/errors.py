"""Exception types shared across the package."""


class DsmkitError(Exception):
    """Base class for all package-specific errors."""


class FrameMismatchError(DsmkitError, ValueError):
    """Two values built over different frames were combined."""


class RegionRangeError(DsmkitError, ValueError):
    """Region index outside 1..2^n-1, or atom index outside 1..n."""


class LabelRenderingError(DsmkitError, ValueError):
    """Region labels cannot be rendered as single digits for n >= 10."""


class NotIsotoneError(DsmkitError, ValueError):
    """A mask that must be upward-closed is not."""


class CapacityError(DsmkitError):
    """An operation was refused because it would exceed a hard size cap.

    Carries the estimate that motivated the refusal, when known.
    """

    def __init__(self, message, element_count=None, total_bytes=None):
        super().__init__(message)
        self.element_count = element_count
        self.total_bytes = total_bytes


class UnknownCardinalityError(DsmkitError, LookupError):
    """No published count exists for this frame size."""


class ParseError(DsmkitError, ValueError):
    """Set-expression syntax error.

    ``offset`` is the UTF-8 byte offset of the offending token and
    ``expected`` the set of token descriptions that would have been legal.
    """

    def __init__(self, message, offset, expected=frozenset()):
        super().__init__(message)
        self.offset = offset
        self.expected = frozenset(expected)


class AtomRangeError(ParseError):
    """Atom index 0 or beyond the frame size, with its byte offset."""


class MassValidationError(DsmkitError, ValueError):
    """A mass assignment violates its invariants (sum, sign, domain)."""


class WeightValidationError(MassValidationError):
    """Redistribution weights do not sum to 1 or leave [0, 1]."""


class ModelViolationError(MassValidationError):
    """A mass file entry is not expressible in the declared model."""


class FullContradictionError(DsmkitError, ArithmeticError):
    """Total conflict between two sources: the orthogonal sum does not exist."""
