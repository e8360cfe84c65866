"""Exceptions shared by all dcdecomp modules."""


class DcdecompError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(DcdecompError):
    """Operands live in different ambient dimensions."""


class DimensionCapExceeded(DcdecompError):
    """Requested computation exceeds the configured dimension cap."""


class EmptyPolyhedron(DcdecompError):
    """Operation requires a nonempty polyhedron."""


class EmptySet(DcdecompError):
    """Operation requires a nonempty lattice set."""


class UnboundedWithoutWindow(DcdecompError):
    """Enumeration of an unbounded region needs an explicit window."""


class NotUnitGenerated(DcdecompError):
    """Cone is not generated by its {-1,0,+1} members.

    Raised by generator extraction; signals that the input cannot be the
    characteristic cone of a box-integer polyhedron.
    """


class RecompositionFailure(DcdecompError):
    """Internal consistency check failed: the parts do not re-sum to the input."""


class ClassVerificationFailure(DcdecompError):
    """A decomposition part failed its discrete-convexity membership test."""


class UnsupportedTag(DcdecompError):
    """Unknown or unsupported discrete-convexity class tag."""


class DInConvR(DcdecompError):
    """Separation target already lies in the hull it must be separated from."""


class InputFormatError(DcdecompError):
    """Malformed serialized input; message names the offending path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
