"""Uniform grids, sampling, and the discrete Fourier coefficient map.

An odd grid of N = 2n+1 nodes t_j = 2*pi*(j-1)/N carries exactly N
independent discrete coefficients a*_0, a*_k, b*_k (k = 1..n). Requesting
a coefficient at any higher harmonic index only replays those N values:
the cosine sequence extends periodically and evenly, the sine sequence
periodically and oddly. ``alias_class`` names that folding and
``extended_coefficient`` applies it.

Coefficients are computed by direct summation (no FFT) so every number
is auditable against the defining formula.
"""

import csv
import io
import math

import numpy as np

from . import _kernels
from .signal_model import evaluate


class UniformGrid:
    """N = 2n+1 equally spaced nodes on [0, 2*pi), starting at 0."""

    __slots__ = ("n", "N", "nodes")

    def __init__(self, n):
        if n < 1 or n != int(n):
            raise ValueError("grid parameter n must be an integer >= 1")
        self.n = int(n)
        self.N = 2 * self.n + 1
        nodes = 2.0 * np.pi * np.arange(self.N) / self.N
        nodes.setflags(write=False)
        self.nodes = nodes

    def __eq__(self, other):
        return isinstance(other, UniformGrid) and other.n == self.n

    def __hash__(self):
        return hash(("UniformGrid", self.n))

    def __repr__(self):
        return f"UniformGrid(n={self.n})"


def make_grid(n):
    """Grid with N = 2n+1 nodes; the only grid shape the package supports."""
    return UniformGrid(n)


class SampleVector:
    """Signal values on the nodes of a uniform grid."""

    __slots__ = ("grid", "values")

    def __init__(self, grid, values):
        values = np.asarray(values, dtype=float)
        if values.shape != (grid.N,):
            raise ValueError(f"expected {grid.N} samples, got {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("samples must be finite")
        values = values.copy()
        values.setflags(write=False)
        self.grid = grid
        self.values = values

    def __repr__(self):
        return f"SampleVector(N={self.grid.N})"


def sample(signal, grid):
    """Evaluate the signal at the grid nodes.

    Accepts the package's analytic signals or any plain callable
    (black-box signals sample fine; only the analytic bound checks need
    known coefficients).
    """
    if hasattr(signal, "kind"):
        return SampleVector(grid, evaluate(signal, grid.nodes))
    values = np.asarray(signal(grid.nodes), dtype=float)
    if values.shape != grid.nodes.shape:
        values = np.array([float(signal(t)) for t in grid.nodes])
    return SampleVector(grid, values)


class DiscreteSpectrum:
    """The N independent discrete coefficients of a sample vector.

    Attributes
    ----------
    grid : UniformGrid
    a0 : float
    a, b : arrays of length n
        Cosine and sine coefficients for k = 1..n.
    """

    __slots__ = ("grid", "a0", "a", "b")

    def __init__(self, grid, a0, a, b):
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if a.shape != (grid.n,) or b.shape != (grid.n,):
            raise ValueError("coefficient arrays must have length n")
        if not (math.isfinite(a0) and np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise ValueError("coefficients must be finite")
        a = a.copy()
        b = b.copy()
        a.setflags(write=False)
        b.setflags(write=False)
        self.grid = grid
        self.a0 = float(a0)
        self.a = a
        self.b = b

    def reconstruct(self, t):
        """Value of the band-limited polynomial a0/2 + sum a_k cos + b_k sin."""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        return _kernels.synth(self.a0, self.a, self.b, t)

    def __repr__(self):
        return f"DiscreteSpectrum(n={self.grid.n})"


def discrete_coeffs(samples):
    """Discrete Fourier coefficients of the samples, by direct summation."""
    a0, a, b = _kernels.dft(samples.values)
    return DiscreteSpectrum(samples.grid, a0, a, b)


class AliasClass(tuple):
    """Band representative of a harmonic index: (k, cos_sign, sin_sign)."""

    __slots__ = ()

    def __new__(cls, k, sin_sign):
        return super().__new__(cls, (k, +1, sin_sign))

    @property
    def k(self):
        return self[0]

    @property
    def cos_sign(self):
        return self[1]

    @property
    def sin_sign(self):
        return self[2]


def alias_class(j, N):
    """Fold harmonic index j onto its band representative.

    On N = 2n+1 nodes the harmonics j and mN +- k are indistinguishable:
    cosines coincide with sign +1 always, sines pick up -1 on the mN - k
    branch. k = 0 marks the constant class (j a multiple of N).
    """
    if N < 3 or N % 2 == 0:
        raise ValueError("N must be odd and >= 3")
    if j < 0 or j != int(j):
        raise ValueError("harmonic index must be an integer >= 0")
    n = (N - 1) // 2
    res = int(j) % N
    if res == 0:
        return AliasClass(0, +1)
    if res <= n:
        return AliasClass(res, +1)
    return AliasClass(N - res, -1)


def extended_coefficient(spectrum, j):
    """Discrete coefficients at any index j >= 1 via the folding rule."""
    if j < 1 or j != int(j):
        raise ValueError("extended index must be an integer >= 1")
    cls = alias_class(j, spectrum.grid.N)
    if cls.k == 0:
        return (spectrum.a0, 0.0)
    return (spectrum.a[cls.k - 1], cls.sin_sign * spectrum.b[cls.k - 1])


# -- CSV wire formats -----------------------------------------------------


def _fmt(x):
    return format(x, ".17g")


def samples_to_csv(samples):
    """CSV text with header ``j,t,f``, one row per node."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j", "t", "f"])
    for j in range(samples.grid.N):
        w.writerow([j + 1, _fmt(samples.grid.nodes[j]), _fmt(samples.values[j])])
    return buf.getvalue()


def samples_from_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != ["j", "t", "f"]:
        raise ValueError("expected header j,t,f")
    values = [float(r[2]) for r in rows[1:]]
    N = len(values)
    if N % 2 == 0 or N < 3:
        raise ValueError("sample CSV must hold an odd number of rows")
    return SampleVector(make_grid((N - 1) // 2), values)


def spectrum_to_csv(spectrum):
    """CSV text with header ``k,a,b``; the k = 0 row carries (a0, 0)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "a", "b"])
    w.writerow([0, _fmt(spectrum.a0), _fmt(0.0)])
    for k in range(1, spectrum.grid.n + 1):
        w.writerow([k, _fmt(spectrum.a[k - 1]), _fmt(spectrum.b[k - 1])])
    return buf.getvalue()


def spectrum_from_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != ["k", "a", "b"]:
        raise ValueError("expected header k,a,b")
    body = rows[1:]
    n = len(body) - 1
    a0 = float(body[0][1])
    a = [float(r[1]) for r in body[1:]]
    b = [float(r[2]) for r in body[1:]]
    return DiscreteSpectrum(make_grid(n), a0, a, b)
