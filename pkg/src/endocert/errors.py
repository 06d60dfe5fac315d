"""Shared exception types."""


class EndocertError(Exception):
    """Base class for errors raised by this package."""


class ParseError(EndocertError, ValueError):
    """Malformed textual input (cycle notation, polynomial grammar, matrix format)."""


class InternalInconsistencyError(EndocertError, RuntimeError):
    """An internal cross-check that can only fail on a bug tripped.

    Raised e.g. when a computed centralizer contradicts a theorem whose
    hypotheses were verified.  Callers should treat this as a defect in the
    engine, never as a property of the input.
    """
