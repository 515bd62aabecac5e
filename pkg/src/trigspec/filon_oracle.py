"""Quadrature route to Fourier coefficients, and the two error bounds.

The slow factor of each coefficient integral is the signal (or its
approximant); the oscillatory cosine/sine acts as a weight. Numerically
the integrals are periodic trapezoid sums on doubling grids — spectrally
accurate for smooth periodic integrands and exact on trigonometric
polynomials whose degree the grid resolves. That gives an independent
oracle for the closed-form spline coefficients: integrating the spline's
*values* must reproduce the coefficients its own series claims.

Both coefficient-error bounds live here as well: the k-independent
sup-norm bound (4/pi) ||f - phi||_C, and the refined bound
variation / (pi k^(q+1)) that restores the decay order q = min(r, m).
"""

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from . import _series
from .errors import QuadratureConvergenceError
from .signal_model import _rotate_pair, true_coefficient, true_coefficient_arrays
from .trig_spline import spline_fourier_coeff

_SUP_MIN_POINTS = 1024


@dataclass(frozen=True)
class QuadratureConfig:
    """Dense-grid quadrature policy.

    ``points`` is the base grid size (a power of two, at least 256);
    grids double until two successive estimates agree within
    ``convergence_tol``, at most ``max_doublings`` times.
    """

    points: int = 1024
    max_doublings: int = 10
    convergence_tol: float = 1e-11

    def __post_init__(self):
        if self.points < 256 or (self.points & (self.points - 1)) != 0:
            raise ValueError("points must be a power of two >= 256")
        if self.max_doublings < 1:
            raise ValueError("max_doublings must be >= 1")
        if self.convergence_tol <= 0:
            raise ValueError("convergence_tol must be positive")


def _values_on_grid(fn, G, cache=None):
    if cache is not None and G in cache:
        return cache[G]
    if hasattr(fn, "eval_on_uniform_grid"):
        vals = np.asarray(fn.eval_on_uniform_grid(G), dtype=float)
    else:
        t = 2.0 * np.pi * np.arange(G) / G
        vals = np.asarray(fn(t), dtype=float)
        if vals.shape != (G,):
            vals = np.array([float(fn(x)) for x in t])
    if cache is not None:
        cache[G] = vals
    return vals


def _trapezoid_pair(values, k):
    G = len(values)
    t = 2.0 * np.pi * np.arange(G) / G
    a = 2.0 / G * float(values @ np.cos(k * t))
    b = 2.0 / G * float(values @ np.sin(k * t))
    return a, b


def quad_fourier_coeff(fn, k, qc=QuadratureConfig(), _cache=None):
    """Coefficients (a_k, b_k) of fn by periodic trapezoid quadrature.

    The grid starts at max(qc.points, 32*max(k,1)) rounded up to a power
    of two and doubles until two successive estimates agree within
    ``qc.convergence_tol`` in both components.

    Raises
    ------
    QuadratureConvergenceError
        When the doubling budget runs out; carries the last two
        estimates.
    """
    if k < 0 or k != int(k):
        raise ValueError("coefficient index must be an integer >= 0")
    k = int(k)
    G = max(qc.points, 32 * max(k, 1))
    if G & (G - 1):
        G = 1 << G.bit_length()
    prev = None
    for _ in range(qc.max_doublings + 1):
        vals = _values_on_grid(fn, G, _cache)
        cur = _trapezoid_pair(vals, k)
        if prev is not None and (
            abs(cur[0] - prev[0]) <= qc.convergence_tol
            and abs(cur[1] - prev[1]) <= qc.convergence_tol
        ):
            return cur
        prev = cur
        G *= 2
    raise QuadratureConvergenceError(
        f"quadrature for k={k} did not converge within "
        f"{qc.max_doublings} doublings (last {prev})",
        last=prev,
        previous=None,
    )


def filon_coeffs(phi, k_range, qc=QuadratureConfig()):
    """Quadrature coefficients of an approximant over a range of indices.

    `k_range` is an inclusive (k_lo, k_hi) pair or an iterable of
    indices. Grid evaluations are shared across indices. Returns a list
    of (k, a_hat_k, b_hat_k).
    """
    if isinstance(k_range, tuple) and len(k_range) == 2:
        indices = range(int(k_range[0]), int(k_range[1]) + 1)
    else:
        indices = [int(k) for k in k_range]
    cache = {}
    out = []
    for k in indices:
        a, b = quad_fourier_coeff(phi, k, qc, _cache=cache)
        out.append((k, a, b))
    return out


def cnorm_error_bound(sup_error):
    """The k-independent coefficient bound (4/pi) * ||f - phi||_C."""
    if sup_error < 0:
        raise ValueError("sup error must be nonnegative")
    return 4.0 / math.pi * sup_error


def refined_error_bound(k, q, diff_variation):
    """Decay-restoring bound variation/(pi k^(q+1)).

    `q` is the shared smoothness order of the signal and approximant
    (the smaller of the two); `diff_variation` bounds the variation of
    the q-th derivative of their difference.
    """
    if k < 1 or k != int(k):
        raise ValueError("bound is defined for integer k >= 1")
    if q < 0:
        raise ValueError("q must be >= 0")
    if diff_variation < 0:
        raise ValueError("diff_variation must be nonnegative")
    return diff_variation / (math.pi * float(k) ** (q + 1))


def sup_distance(f, g, points=4096):
    """Max of |f - g| over a dense uniform grid (a lower sup-norm estimate)."""
    if points < _SUP_MIN_POINTS:
        raise ValueError(f"points must be >= {_SUP_MIN_POINTS}")
    fv = _values_on_grid(f, points)
    gv = _values_on_grid(g, points)
    return float(np.max(np.abs(fv - gv)))


def estimate_diff_variation(signal, spline, q, points=2**16, j_terms=None):
    """Grid estimate of Var of the q-th derivative of (signal - spline).

    The difference series is truncated at `j_terms` coefficients
    (default 4*points), differentiated termwise, folded onto the grid
    and measured by summed absolute steps. An estimate, not a bound:
    truncation ripple inflates it slightly, which only loosens the bound
    it feeds.
    """
    if j_terms is None:
        j_terms = 4 * points
    js = np.arange(1, j_terms + 1)
    sa, sb = _spline_law_arrays(spline, js)
    ta, tb = true_coefficient_arrays(signal, j_terms)
    diff_a = ta - sa
    diff_b = tb - sb
    rot = q % 4
    ra, rb = _rotate_pair(diff_a, diff_b, rot)
    scale = js.astype(float) ** q
    da = scale * ra
    db = scale * rb
    W = np.zeros(points, dtype=complex)
    np.add.at(W, js % points, da - 1j * db)
    vals = _series.synth_folded(W, 0.0)
    return _series.grid_total_variation(vals)


def _spline_law_arrays(spline, js):
    from .trig_spline import _law_coefficients

    return _law_coefficients(spline.config, spline.spectrum, spline.table, js)


def filon_table(signal, spline, k_max, qc=QuadratureConfig(), sup_points=2**14):
    """Rows for the coefficient-comparison CSV with both bounds attached."""
    sup = sup_distance(signal, spline, sup_points)
    cbound = cnorm_error_bound(sup)
    q = min(signal.smoothness.r, spline.config.order)
    dv = estimate_diff_variation(signal, spline, q)
    rows = []
    for k in range(1, k_max + 1):
        ah, bh = spline_fourier_coeff(spline, k)
        ta, tb = true_coefficient(signal, k)
        rows.append(
            {
                "k": k,
                "a_hat": ah,
                "b_hat": bh,
                "a_true": ta,
                "b_true": tb,
                "cnorm_bound": cbound,
                "refined_bound": refined_error_bound(k, q, dv),
            }
        )
    return rows


def filon_table_to_csv(rows):
    """CSV with the fixed coefficient-comparison column set."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["k", "a_hat", "b_hat", "a_true", "b_true", "cnorm_bound", "refined_bound"]
    w.writerow(header)
    for r in rows:
        w.writerow([r["k"]] + [format(r[c], ".17g") for c in header[1:]])
    return buf.getvalue()
