"""Exception hierarchy for the package.

The command-line front end maps these onto exit codes: invalid input is
exit 1, numerical failures (degenerate fits, diverging orbits) are exit 2.
"""


class DimestError(Exception):
    """Base class for every error raised by this package."""


class InputError(DimestError):
    """Invalid input: bad files, malformed values, mismatched dimensions."""


class NumericalError(DimestError):
    """A computation failed numerically rather than through bad input."""


class DegenerateFitError(NumericalError):
    """A regression had no usable signal (too few or coincident scales)."""


class OrbitDivergedError(NumericalError):
    """An orbit left the guard region before sampling completed."""
