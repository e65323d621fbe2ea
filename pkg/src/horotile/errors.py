"""Exception hierarchy shared by the library and the command line."""


class HorotileError(Exception):
    """Base class for every error raised by this package."""


class IndexBeyondWord(HorotileError, IndexError):
    """A finite word was asked for a letter (or layer) it does not contain."""


class FiniteWordMode(HorotileError):
    """A global invariant was requested from a finite word."""


class WallDissectsTile(HorotileError):
    """A pool wall cuts through a tile. Indicates an internal bug."""


class EmptyWindow(HorotileError, ValueError):
    pass


class WindowTooSmall(HorotileError, ValueError):
    pass


class InsufficientData(HorotileError, ValueError):
    pass


class UnsupportedDimension(HorotileError, ValueError):
    pass


class ParseError(HorotileError, ValueError):
    """Malformed spec document (not JSON, wrong shapes)."""


class ValidationError(HorotileError, ValueError):
    """Well-formed spec document carrying illegal values."""
