"""Exception types shared across the package.

Each error carries a stable machine-readable ``code`` that the CLI echoes in
its error reports.
"""


class ToricError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "Error"


class NotPointedError(ToricError):
    """The configuration admits a nonzero nonnegative kernel vector."""

    code = "NotPointed"


class NotSimpleError(ToricError):
    """The configuration has a bouquet with more than one column."""

    code = "NotSimple"


class FreeVectorError(ToricError):
    """The configuration has a free column (zero Gale row)."""

    code = "FreeVectorPresent"


class FreeBouquetError(ToricError):
    """The bouquet decomposition contains the free bouquet."""

    code = "FreeBouquetPresent"


class NotInGraverError(ToricError):
    """The vector is not a member of the given Graver basis."""

    code = "NotInGraver"


class TooFewColumnsError(ToricError):
    """A configuration in Z^d needs at least d+2 columns here."""

    code = "TooFewColumns"


class NonIncreasingError(ToricError):
    """Parameter values must be strictly increasing."""

    code = "NonIncreasing"


class GcdNotOneError(ToricError):
    """Entries must have greatest common divisor 1."""

    code = "GcdNotOne"


class FullSupportError(ToricError):
    """A block vector must have no zero entry."""

    code = "FullSupportViolated"


class FirstComponentError(ToricError):
    """A block vector must have a positive first entry."""

    code = "FirstComponentNotPositive"


class BezoutMismatchError(ToricError):
    """Supplied coefficients do not pair to 1 against their block vector."""

    code = "BezoutMismatch"


class OracleMismatchError(ToricError):
    """A brute-force cross-check disagreed with the main computation."""

    code = "OracleMismatch"


class MalformedHeaderError(ToricError):
    """Matrix file header is not two integers on the first line."""

    code = "MalformedHeader"


class EntryCountMismatchError(ToricError):
    """Matrix file body does not hold rows*cols entries."""

    code = "EntryCountMismatch"


class NonIntegerTokenError(ToricError):
    """Matrix file body contains a token that is not an integer."""

    code = "NonIntegerToken"


class SpecFileError(ToricError):
    """A construction spec file could not be interpreted."""

    code = "SpecFile"
