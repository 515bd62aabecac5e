"""Exception types shared across the package.

Domain errors (bad arguments, invalid configuration) raise plain
``ValueError``; the classes below mark *numerical* failures that a caller
may want to catch separately, e.g. the command line front end maps them
to a dedicated exit code.
"""


class NumericalError(Exception):
    """A computation could not reach its accuracy contract."""


class DegenerateKernelError(NumericalError):
    """A class normalizer came out below the guard threshold.

    Only conceivable for the signed sinc-power factor family with an odd
    power; positive factor families cannot trigger it.
    """


class QuadratureConvergenceError(NumericalError):
    """Grid-doubling quadrature failed to converge.

    Carries the last two estimates so callers can report how far apart
    they were.
    """

    def __init__(self, message, last=None, previous=None):
        super().__init__(message)
        self.last = last
        self.previous = previous


class SeriesPrecisionError(NumericalError):
    """A series evaluation cannot meet its tail-bound contract within the term cap."""


class UnsupportedSignalError(ValueError):
    """The operation needs analytically known Fourier coefficients."""
