"""Exception hierarchy.

Every domain failure raised by the package derives from :class:`BraidForgeError`,
which the command line maps to exit status 1.
"""


class BraidForgeError(ValueError):
    """Base class for domain errors."""


class FormatError(BraidForgeError):
    """Malformed text input (braid, presentation or trajectory file)."""


class InvalidStrandCount(BraidForgeError):
    pass


class ShiftOutOfRange(BraidForgeError):
    pass


class IncompatibleWords(BraidForgeError):
    """Two braid words with different strand counts were combined."""


class NotAProperSimple(BraidForgeError):
    pass


class EnumerationOverflow(BraidForgeError):
    """Coset enumeration hit its cap before the table closed."""


class NotRegular(BraidForgeError):
    pass


class TooLarge(BraidForgeError):
    pass


class NotEliminable(BraidForgeError):
    pass


class InvalidCertificate(BraidForgeError):
    pass


class EmptyStratum(BraidForgeError):
    pass


class TooFewSamples(BraidForgeError):
    pass


class InvalidPaths(BraidForgeError):
    pass


class DegenerateProjection(BraidForgeError):
    pass


class UndersampledCrossing(BraidForgeError):
    pass


class InvalidRange(BraidForgeError):
    pass
