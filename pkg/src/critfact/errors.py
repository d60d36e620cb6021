"""Exception types shared by all critfact modules."""


class CritfactError(Exception):
    """Base class for every error raised by this package."""


class EmptyWord(CritfactError):
    """An operation that needs at least one letter got the empty word."""


class TooShort(CritfactError):
    """The word is too short to have positions (|w| < 2)."""


class InvalidPosition(CritfactError):
    """Position outside 1 <= p < |w|."""


class InvalidPeriod(CritfactError):
    """Candidate period outside 1 <= q <= |w|."""


class AlphabetError(CritfactError):
    """A letter outside the declared alphabet."""


class EmptyFactor(CritfactError):
    """A factor argument must be nonempty."""


class RangeError(CritfactError):
    """A numeric parameter outside its documented range."""


class InsufficientBound(CritfactError):
    """A search bound too small to host the requested number of hits."""


class ResourceGuard(CritfactError):
    """A run would exceed the configured resource ceiling."""
