"""
The Bohr operator M_r(f) = sum |a_n| r^n and certified sup norms on circles.

Every quantity is returned as a :class:`CertifiedValue` bracket. The only
uncertainty in M_r comes from the unknown coefficients above the truncation
degree, bounded through |a_n| <= M when |f| <= M on the disk. Sup norms of
polynomials are bracketed by sampling plus a derivative bound per arc.
"""
import logging
import math
import warnings

import numpy as np

from .errors import RadiusOutOfRange
from .presets import setting
from .series import TruncatedSeries, evaluate

logger = logging.getLogger(__name__)

EPS = np.finfo(float).eps


class CertifiedValue(dict):
    """
    {
        lower: "guaranteed lower bound",
        upper: "guaranteed upper bound (absent when unbounded)",
        unbounded: "true when no upper bound is known"
    }
    """
    def __init__(self, lower, upper=None):
        lower = float(lower)
        if upper is None:
            super(CertifiedValue, self).__init__(lower=lower, unbounded=True)
        else:
            upper = float(upper)
            if not lower <= upper:
                raise ValueError('Bracket is inverted: [{}, {}]'.format(lower, upper))
            super(CertifiedValue, self).__init__(lower=lower, upper=upper)

    @classmethod
    def point(cls, value):
        return cls(value, value)

    @classmethod
    def from_json(cls, data):
        if data.get('unbounded'):
            return cls(data['lower'])
        return cls(data['lower'], data['upper'])

    @property
    def lower(self):
        return self['lower']

    @property
    def upper(self):
        return self.get('upper', math.inf)

    @property
    def unbounded(self):
        return 'upper' not in self

    @property
    def width(self):
        return self.upper - self.lower

    def contains(self, x, slack=0.0):
        return self.lower - slack <= x <= self.upper + slack


class RadiusParam(float):
    """A radius r with 0 <= r < 1."""
    def __new__(cls, r):
        r = float(r)
        if not 0 <= r < 1:
            raise RadiusOutOfRange('Radius must satisfy 0 <= r < 1, got {}'.format(r))
        return super(RadiusParam, cls).__new__(cls, r)


def majorant(f: TruncatedSeries) -> TruncatedSeries:
    """The series with coefficients |a_n|."""
    return TruncatedSeries(np.abs(f.coeffs))


def _majorant_sum(f: TruncatedSeries, r: float) -> float:
    return float(np.polynomial.polynomial.polyval(r, np.abs(f.coeffs)))


def bohr_value(f: TruncatedSeries, r, sup_bound: float=None) -> CertifiedValue:
    """
    M_r(f) for the analytic function whose first coefficients are `f`.

    With `sup_bound` M (the caller asserts |f| <= M on the disk) the unknown
    tail is at most M r^{N+1} / (1 - r). Without it the result carries only a
    lower value and is flagged unbounded.
    """
    r = RadiusParam(r)
    lower = _majorant_sum(f, r)
    if sup_bound is None:
        warnings.warn('No sup bound given: M_r(f) has no certified upper bound')
        return CertifiedValue(lower)

    tail = sup_bound * r ** (f.degree + 1) / (1 - r)
    return CertifiedValue(lower, lower + tail)


def polynomial_value(p: TruncatedSeries, r: float) -> CertifiedValue:
    """M_r(p) when `p` is the whole function (its truncation is exact)."""
    if r < 0:
        raise RadiusOutOfRange('Radius cannot be negative: {}'.format(r))
    return CertifiedValue.point(_majorant_sum(p, r))


def bohr_values(f: TruncatedSeries, radii, sup_bound: float=None):
    return [bohr_value(f, r, sup_bound) for r in radii]


def derivative_bounds(p: TruncatedSeries, r: float):
    """
    Bounds on the first and second derivatives of theta -> p(r e^{i theta}):
    sum n |a_n| r^n and sum n^2 |a_n| r^n.
    """
    n = np.arange(p.degree + 1)
    weights = np.abs(p.coeffs) * float(r) ** n
    return float(np.sum(n * weights)), float(np.sum(n * n * weights))


def evaluation_allowance(p: TruncatedSeries, r: float) -> float:
    """Floating-point error allowance for evaluating p on |z| = r."""
    if p.degree == 0:
        return 0.0
    return 4 * (p.degree + 1) * EPS * _majorant_sum(p, r)


def _arc_bounds(v_left, v_right, width, d1, d2):
    slack = np.minimum(d1 * width / 2, d2 * width * width / 8)
    return np.maximum(v_left, v_right) + slack


def _moduli(p, r, theta):
    return np.abs(evaluate(p, r * np.exp(1j * theta)))


def circle_bracket(p: TruncatedSeries, r: float, samples: int=None, threshold: float=None) -> CertifiedValue:
    """
    Certified bracket of max |p(z)| over |z| = r, for 0 <= r <= 1.

    lower is the largest sampled modulus. Each arc between neighbouring
    samples is bounded by its larger endpoint plus the smaller of the
    first-order slack d1 w / 2 and the second-order slack d2 w^2 / 8, where
    w is the arc's angular width. Arcs that could still hold the maximum are
    subdivided until the bracket is tight, the point budget runs out, or the
    bracket already decides against `threshold`. The upper bound is finally
    capped by M_r(p).
    """
    if samples is None:
        samples = setting('bohr', 'samples')
    if samples < 64:
        raise ValueError('At least 64 samples are required, got {}'.format(samples))
    if not 0 <= r <= 1:
        raise RadiusOutOfRange('Circle radius must lie in [0, 1], got {}'.format(r))

    r = float(r)
    cap = _majorant_sum(p, r)
    allowance = evaluation_allowance(p, r)
    if p.degree == 0 or r == 0:
        v = abs(p[0])
        return CertifiedValue.point(v)

    d1, d2 = derivative_bounds(p, r)
    split = setting('bohr', 'refine_split')
    budget = setting('bohr', 'max_refine_points')

    left = 2 * math.pi * np.arange(samples) / samples
    width = np.full(samples, 2 * math.pi / samples)
    values = _moduli(p, r, left)
    v_left = values
    v_right = np.roll(values, -1)

    lower = float(values.max())
    bounds = _arc_bounds(v_left, v_right, width, d1, d2)
    target = max(setting('bohr', 'refine_tol') * max(1.0, lower), allowance)
    evaluations = samples

    while True:
        upper = min(float(bounds.max()), cap)
        if upper - lower <= target:
            break
        if threshold is not None and (upper + allowance <= threshold or lower - allowance > threshold):
            break

        active = bounds > lower + target
        n_active = int(active.sum())
        if evaluations + n_active * (split - 1) > budget:
            warnings.warn('Refinement budget reached at {} evaluations, bracket width {:.3g}'
                          .format(evaluations, upper - lower))
            break

        a_left, a_width = left[active], width[active]
        a_vl, a_vr = v_left[active], v_right[active]
        steps = np.arange(split)
        sub_left = (a_left[:, None] + a_width[:, None] * steps[None, :] / split).reshape(-1)
        sub_width = np.repeat(a_width / split, split)

        interior = _moduli(p, r, (a_left[:, None] + a_width[:, None] * steps[None, 1:] / split).reshape(-1))
        interior = interior.reshape(n_active, split - 1)
        evaluations += interior.size

        sub_vl = np.concatenate([a_vl[:, None], interior], axis=1).reshape(-1)
        sub_vr = np.concatenate([interior, a_vr[:, None]], axis=1).reshape(-1)

        left = np.concatenate([left[~active], sub_left])
        width = np.concatenate([width[~active], sub_width])
        v_left = np.concatenate([v_left[~active], sub_vl])
        v_right = np.concatenate([v_right[~active], sub_vr])
        lower = max(lower, float(interior.max()) if interior.size else lower)
        bounds = _arc_bounds(v_left, v_right, width, d1, d2)

    upper = min(float(bounds.max()) + allowance, cap + allowance)
    lower = max(0.0, min(lower - allowance, upper))

    return CertifiedValue(lower, upper)


def sup_on_circle(p: TruncatedSeries, r, samples: int=None, threshold: float=None) -> CertifiedValue:
    """
    Certified bracket of sup_{|z| = r} |p(z)| for the polynomial `p`, 0 <= r < 1.

    The bracket is never wider than [max sample, max sample + L pi r / m]
    with L = sum n |a_n| r^{n-1}, up to the floating-point allowance.
    """
    r = RadiusParam(r)
    return circle_bracket(p, r, samples=samples, threshold=threshold)
