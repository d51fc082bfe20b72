"""Exception hierarchy.

PreconditionError maps to CLI exit code 2, UnsupportedInputError to exit
code 3.  InternalCheckError marks a failed self-consistency check and is
never caught: it signals a bug, not bad input.
"""


class VvmfError(Exception):
    """Base class for all library errors."""


class PreconditionError(VvmfError):
    """An operation was called with input violating its stated contract."""


class PrecisionError(PreconditionError):
    """A series does not carry enough known coefficients for the request."""


class CongruentRootsError(PreconditionError):
    """Two indicial roots differ by an integer; logarithmic solutions are out of scope."""


class ReducibilityBoundaryError(PreconditionError):
    """e(r_1 - r_2) is a primitive sixth root of unity; the two-dimensional classification does not apply."""


class ParityUnsolvableError(PreconditionError):
    """The sign identity fixing the parity of N has no solution for the given input."""


class TDeterminedRequiredError(PreconditionError):
    """The classification needs the T-determined hypothesis and it was neither asserted nor auto-detected."""


class DivisibilityError(PreconditionError):
    """A component has a nonzero coefficient inside the window that must vanish before dividing by Delta."""


class FactorizationError(PreconditionError):
    """The Wronskian factorization produced a cusp form where a non-cusp form is guaranteed."""


class UnsupportedInputError(VvmfError):
    """Input falls in a class the engine deliberately does not handle."""


class InternalCheckError(VvmfError):
    """Two independent computation routes disagreed; indicates a bug."""
