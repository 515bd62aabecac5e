"""Periodic test signals with analytically known Fourier coefficients.

Every later identity and bound in the package is checked against these
signals, so the module keeps evaluation *exact*: finite harmonic sums are
summed directly, and the power-decay families use Bernoulli-polynomial
closed forms whenever the decay exponent's parity matches the series
(cosine with even integer p, sine with odd integer p). Other exponents
fall back to a truncated sum whose tail is provably below 1e-14.

A signal carries its smoothness class: the order ``r`` of the derivative
that still has bounded variation, and an upper bound on that variation.
Those two numbers feed every decay and aliasing bound downstream.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, _series
from .errors import SeriesPrecisionError

HARMONIC_SUM = "HarmonicSum"
POWER_DECAY_COSINE = "PowerDecayCosine"
POWER_DECAY_SINE = "PowerDecaySine"

_KINDS = (HARMONIC_SUM, POWER_DECAY_COSINE, POWER_DECAY_SINE)

# Tail contract for truncated power-decay evaluation.
_EVAL_TAIL = 1e-14
_EVAL_TERM_CAP = 30_000_000


@dataclass(frozen=True)
class SmoothnessInfo:
    """Smoothness class of a periodic signal.

    Attributes
    ----------
    r : int
        Order of the derivative with bounded variation (r >= 0).
    variation : float
        Upper bound on the total variation of that derivative over one
        period.
    """

    r: int
    variation: float

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("smoothness order r must be >= 0")
        if not math.isfinite(self.variation) or self.variation < 0:
            raise ValueError("variation must be finite and >= 0")


@dataclass(frozen=True)
class AnalyticSignal:
    """A 2*pi-periodic signal with closed-form Fourier coefficients.

    Use the factory functions :func:`harmonic_sum`,
    :func:`power_decay_cosine` and :func:`power_decay_sine` rather than
    the constructor. Instances are immutable and safe to share.
    """

    kind: str
    terms: tuple  # ((k, a_k, b_k), ...) for HarmonicSum; () otherwise
    p: float | None
    smoothness: SmoothnessInfo

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown signal kind {self.kind!r}")
        if self.kind == HARMONIC_SUM:
            seen = set()
            for k, a, b in self.terms:
                if k < 0 or k != int(k):
                    raise ValueError("harmonic indices must be integers >= 0")
                if k in seen:
                    raise ValueError(f"duplicate harmonic index {k}")
                if k == 0 and b != 0.0:
                    raise ValueError("the k=0 term carries only a cosine coefficient")
                if not (math.isfinite(a) and math.isfinite(b)):
                    raise ValueError("harmonic coefficients must be finite")
                seen.add(k)
        else:
            if self.p is None or self.p <= 1.0:
                raise ValueError("power-decay kinds need p > 1")
            if self.terms:
                raise ValueError("power-decay kinds take no term list")

    # -- evaluation ------------------------------------------------------

    def __call__(self, t):
        return evaluate(self, t)

    def true_coefficient(self, k):
        return true_coefficient(self, k)

    def fourier_series(self, j_max=None):
        """Truncated coefficient view (a0, a[1..j_max], b[1..j_max]).

        For harmonic sums the default j_max is the largest harmonic (an
        exact view); power-decay kinds must say how far to truncate.
        """
        if j_max is None:
            if self.kind != HARMONIC_SUM:
                raise ValueError("specify j_max for power-decay kinds")
            j_max = max((k for k, _, _ in self.terms), default=1)
        a, b = true_coefficient_arrays(self, j_max)
        return true_coefficient(self, 0)[0], a, b


def _exact_power_eval(kind, p, t):
    """Closed-form power series value, or None when no closed form applies."""
    if p != int(p):
        return None
    s = int(p)
    if kind == POWER_DECAY_COSINE and s % 2 == 0:
        return _series.fourier_power_cos(s, t)
    if kind == POWER_DECAY_SINE and s % 2 == 1:
        return _series.fourier_power_sin(s, t)
    return None


def _truncated_power_eval(kind, p, t):
    # Tail of sum_{k>K} k^-p is below K^(1-p)/(p-1); pick K for the 1e-14 contract.
    K = math.ceil(((p - 1.0) * _EVAL_TAIL) ** (-1.0 / (p - 1.0)))
    if K > _EVAL_TERM_CAP:
        raise SeriesPrecisionError(
            f"power-decay evaluation with p={p} needs {K} terms for the "
            f"1e-14 tail contract, above the cap {_EVAL_TERM_CAP}"
        )
    coeff = np.arange(1, K + 1, dtype=float) ** -p
    zeros = np.zeros(K)
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if kind == POWER_DECAY_COSINE:
        vals = _kernels.synth(0.0, coeff, zeros, t_arr)
    else:
        vals = _kernels.synth(0.0, zeros, coeff, t_arr)
    return vals if np.ndim(t) else float(vals[0])


def evaluate(signal, t):
    """Signal value f(t); scalar in, scalar out; arrays pass through.

    Raises a domain error on non-finite input. 2*pi-periodicity is exact
    because angles are reduced before evaluation.
    """
    t_arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t_arr)):
        raise ValueError("evaluation point must be finite")
    if signal.kind == HARMONIC_SUM:
        flat = np.atleast_1d(t_arr)
        out = np.zeros(flat.shape)
        for k, a, b in signal.terms:
            if k == 0:
                out += 0.5 * a
            else:
                out += a * np.cos(k * flat) + b * np.sin(k * flat)
        return out.reshape(t_arr.shape) if t_arr.ndim else float(out[0])
    exact = _exact_power_eval(signal.kind, signal.p, t_arr)
    if exact is not None:
        return exact if t_arr.ndim else float(exact)
    return _truncated_power_eval(signal.kind, signal.p, t_arr if t_arr.ndim else float(t_arr))


def true_coefficient(signal, k):
    """Exact Fourier coefficients (a_k, b_k); k = 0 returns (a_0, 0)."""
    if k < 0 or k != int(k):
        raise ValueError("coefficient index must be an integer >= 0")
    k = int(k)
    if signal.kind == HARMONIC_SUM:
        for kk, a, b in signal.terms:
            if kk == k:
                return (a, 0.0) if k == 0 else (a, b)
        return (0.0, 0.0)
    if k == 0:
        return (0.0, 0.0)
    mag = float(k) ** -signal.p
    if signal.kind == POWER_DECAY_COSINE:
        return (mag, 0.0)
    return (0.0, mag)


def true_coefficient_arrays(signal, j_max):
    """Vectorized (a, b) coefficient arrays for j = 1..j_max."""
    j_max = int(j_max)
    if signal.kind == HARMONIC_SUM:
        a = np.zeros(j_max)
        b = np.zeros(j_max)
        for k, ta, tb in signal.terms:
            if 1 <= k <= j_max:
                a[k - 1] = ta
                b[k - 1] = tb
        return a, b
    mags = np.arange(1, j_max + 1, dtype=float) ** -signal.p
    zeros = np.zeros(j_max)
    if signal.kind == POWER_DECAY_COSINE:
        return mags, zeros
    return zeros, mags


def coefficient_bound(smoothness, k):
    """Decay bound (1/pi) * variation / k^(r+1), valid for |a_k| and |b_k|.

    Defined for k >= 1 only.
    """
    if k < 1 or k != int(k):
        raise ValueError("decay bound is defined for integer k >= 1")
    return smoothness.variation / (math.pi * float(k) ** (smoothness.r + 1))


# -- factories -----------------------------------------------------------


def harmonic_sum(terms, r=1):
    """Finite harmonic sum with exact smoothness bookkeeping.

    Parameters
    ----------
    terms : iterable of (k, a_k, b_k)
        Harmonic indices (k=0 allowed for the constant coefficient) and
        coefficients.
    r : int
        Smoothness order to declare. The variation of the r-th derivative
        is bounded by ``sum_k 4 k^(r+1) sqrt(a_k^2+b_k^2)`` (exact for a
        single harmonic, subadditive upper bound otherwise).
    """
    terms = tuple(sorted((int(k), float(a), float(b)) for k, a, b in terms))
    variation = sum(
        4.0 * k ** (r + 1) * math.hypot(a, b) for k, a, b in terms if k >= 1
    )
    return AnalyticSignal(
        kind=HARMONIC_SUM,
        terms=terms,
        p=None,
        smoothness=SmoothnessInfo(r=r, variation=variation),
    )


_SAWTOOTH_VARIATION = math.pi**2 / 2.0  # integral of |pi - t|/2 over one period


def _power_smoothness(kind, p, r, variation):
    if r is not None and variation is not None:
        return SmoothnessInfo(r=r, variation=float(variation))
    matched = (
        p == int(p)
        and (
            (kind == POWER_DECAY_COSINE and int(p) % 2 == 0)
            or (kind == POWER_DECAY_SINE and int(p) % 2 == 1)
        )
    )
    if not matched:
        raise ValueError(
            "smoothness (r, variation) must be supplied explicitly for this p; "
            "closed-form values exist only for parity-matched integer p "
            "(see estimate_derivative_variation for a numerical derivation)"
        )
    # The (p-1)-th derivative is the sawtooth sum sin(kt)/k up to sign, so the
    # (p-2)-th derivative has variation integral |pi - t|/2 dt = pi^2/2 exactly.
    return SmoothnessInfo(r=int(p) - 2, variation=_SAWTOOTH_VARIATION)


def power_decay_cosine(p, r=None, variation=None):
    """Signal with a_k = k^-p, b_k = 0 (p > 1).

    For even integer p the smoothness class (r = p-2, variation = pi^2/2)
    is derived in closed form; otherwise pass both `r` and `variation`.
    """
    p = float(p)
    return AnalyticSignal(
        kind=POWER_DECAY_COSINE,
        terms=(),
        p=p,
        smoothness=_power_smoothness(POWER_DECAY_COSINE, p, r, variation),
    )


def power_decay_sine(p, r=None, variation=None):
    """Signal with b_k = k^-p, a_k = 0 (p > 1); closed-form class for odd integer p."""
    p = float(p)
    return AnalyticSignal(
        kind=POWER_DECAY_SINE,
        terms=(),
        p=p,
        smoothness=_power_smoothness(POWER_DECAY_SINE, p, r, variation),
    )


# -- numerical derivation of variation -----------------------------------


def derivative_values(signal, order, t):
    """Values of the order-th derivative of the signal at points t.

    Derivatives are taken termwise (k^order with a quarter-period phase
    shift), never by finite differences.
    """
    t = np.asarray(t, dtype=float)
    rot = order % 4
    if signal.kind == HARMONIC_SUM:
        out = np.zeros(t.shape)
        for k, a, b in signal.terms:
            if k == 0:
                continue
            scale = float(k) ** order
            ka, kb = _rotate_pair(a, b, rot)
            out += scale * (ka * np.cos(k * t) + kb * np.sin(k * t))
        return out
    s = signal.p - order
    if s <= 1:
        raise ValueError("derivative series no longer converges absolutely")
    base_cos = signal.kind == POWER_DECAY_COSINE
    # Termwise derivative rotates cos->-sin->-cos->sin (and sin->cos->-sin->-cos).
    ka, kb = _rotate_pair(1.0 if base_cos else 0.0, 0.0 if base_cos else 1.0, rot)
    if s == int(s) and int(s) % 2 == 0 and kb == 0.0:
        return ka * _series.fourier_power_cos(int(s), t)
    if s == int(s) and int(s) % 2 == 1 and ka == 0.0:
        return kb * _series.fourier_power_sin(int(s), t)
    kind = POWER_DECAY_COSINE if kb == 0.0 else POWER_DECAY_SINE
    sign = ka if kb == 0.0 else kb
    return sign * _truncated_power_eval(kind, s, t)


def _rotate_pair(a, b, rot):
    # Quarter-period phase shifts of a*cos + b*sin under differentiation.
    if rot == 0:
        return a, b
    if rot == 1:
        return b, -a
    if rot == 2:
        return -a, -b
    return -b, a


def estimate_derivative_variation(signal, order, points=2**16):
    """Grid estimate of the total variation of the order-th derivative.

    This is the documented derivation path for supplying `variation` to
    the power-decay factories when no closed form applies. The estimate
    converges from below for continuous derivatives.
    """
    t = np.linspace(0.0, _series.TWO_PI, points, endpoint=False)
    return _series.grid_total_variation(derivative_values(signal, order, t))


# -- serialization ---------------------------------------------------------


def signal_to_json(signal):
    """JSON document with the fixed field names kind/terms/p/r/variation."""
    return {
        "kind": signal.kind,
        "terms": [[k, a, b] for k, a, b in signal.terms],
        "p": signal.p,
        "r": signal.smoothness.r,
        "variation": signal.smoothness.variation,
    }


def signal_from_json(doc):
    """Inverse of :func:`signal_to_json`; accepts a dict or a JSON string."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    kind = doc["kind"]
    smooth = SmoothnessInfo(r=int(doc["r"]), variation=float(doc["variation"]))
    if kind == HARMONIC_SUM:
        terms = tuple(sorted((int(k), float(a), float(b)) for k, a, b in doc["terms"]))
        return AnalyticSignal(kind=kind, terms=terms, p=None, smoothness=smooth)
    return AnalyticSignal(kind=kind, terms=(), p=float(doc["p"]), smoothness=smooth)


# -- reference suite -------------------------------------------------------


def suite_signals():
    """The named signal suite used by the acceptance checks."""
    return {
        "harmonic-single": harmonic_sum([(1, 1.0, 0.0)], r=3),
        "harmonic-mixed": harmonic_sum(
            [(0, 0.8, 0.0), (1, 0.5, -0.25), (3, 0.75, 0.5), (6, -0.25, 1.0)], r=2
        ),
        "power-cos-2": power_decay_cosine(2),
        "power-cos-4": power_decay_cosine(4),
        "power-cos-6": power_decay_cosine(6),
        "power-sin-3": power_decay_sine(3),
        "power-sin-5": power_decay_sine(5),
    }
