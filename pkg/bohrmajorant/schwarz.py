"""
Generators of Schwarz functions (phi(0) = 0, |phi| <= 1) and of unit-bounded
analytic functions: the extremal Moebius family, finite Blaschke products,
the backward Schur recursion, the Koebe univalent witness, and seeded
random sampling of each family.
"""
import logging
import math

import numpy as np

from .bohr import circle_bracket
from .errors import ParameterOutOfRange, BudgetExhausted
from .presets import setting
from .series import TruncatedSeries, constant, mul, reciprocal, shift, scale, add, default_degree

logger = logging.getLogger(__name__)

MOEBIUS = 'moebius'
BLASCHKE = 'blaschke'
SCHUR = 'schur'

ZERO_MARGIN = 1e-9


def _degree(N):
    return default_degree() if N is None else N


def moebius_series(a: float, N: int=None) -> TruncatedSeries:
    """(a - z) / (1 - a z) = a - (1 - a^2) sum_{n>=1} a^{n-1} z^n"""
    N = _degree(N)
    a = float(a)
    if not 0 <= a < 1:
        raise ParameterOutOfRange('Moebius parameter must satisfy 0 <= a < 1, got {}'.format(a))

    c = np.empty(N + 1)
    c[0] = a
    if N >= 1:
        ratios = np.full(N, a)
        ratios[0] = -(1 - a * a)
        c[1:] = np.cumprod(ratios)

    return TruncatedSeries(c)


def _check_zeros(zeros):
    zeros = [complex(z) for z in zeros]
    for z in zeros:
        if abs(z) > 1 - ZERO_MARGIN:
            raise ParameterOutOfRange('Blaschke zeros must lie inside the disk, got |{}| = {}'.format(z, abs(z)))
    return zeros


def blaschke_factor(alpha: complex, N: int=None) -> TruncatedSeries:
    """(alpha - z) / (1 - conj(alpha) z)"""
    N = _degree(N)
    alpha = complex(alpha)
    conj = alpha.conjugate()
    c = np.empty(N + 1, dtype=complex)
    c[0] = alpha
    if N >= 1:
        ratios = np.full(N, conj, dtype=complex)
        ratios[0] = -(1 - abs(alpha) ** 2)
        c[1:] = np.cumprod(ratios)

    return TruncatedSeries(c)


def blaschke_bounded(zeros, rotation: float=0.0, N: int=None) -> TruncatedSeries:
    """e^{i theta} prod (zero_i - z) / (1 - conj(zero_i) z), unit-modulus on the circle."""
    N = _degree(N)
    zeros = _check_zeros(zeros)

    b = constant(1.0, N)
    for alpha in zeros:
        b = mul(b, blaschke_factor(alpha, N), N)

    return scale(b, complex(math.cos(rotation), math.sin(rotation)))


def blaschke_schwarz(zeros, rotation: float=0.0, N: int=None) -> TruncatedSeries:
    """z times a finite Blaschke product: a Schwarz function by construction."""
    N = _degree(N)
    return shift(blaschke_bounded(zeros, rotation, N), 1, N)


def schur_series(gammas, N: int=None) -> TruncatedSeries:
    """
    Unit-bounded function with Schur parameters `gammas`, built backwards:
    f_m = gamma_m, f_k = (gamma_k + z f_{k+1}) / (1 + conj(gamma_k) z f_{k+1}).
    """
    N = _degree(N)
    gammas = [complex(g) for g in gammas]
    if not gammas:
        raise ParameterOutOfRange('At least one Schur parameter is required')
    for g in gammas:
        if abs(g) > 1:
            raise ParameterOutOfRange('Schur parameters must satisfy |gamma| <= 1, got {}'.format(g))

    f = constant(gammas[-1], N)
    for g in reversed(gammas[:-1]):
        zf = shift(f, 1, N)
        numerator = add(constant(g, N), zf)
        denominator = add(constant(1.0, N), scale(zf, g.conjugate()))
        f = mul(numerator, reciprocal(denominator, N), N)

    return f


def koebe_series(N: int=None, rotation: float=0.0) -> TruncatedSeries:
    """
    Rotations of the Koebe function, e^{-i theta} k(e^{i theta} z) with
    k(z) = z / (1 - z)^2 = sum n z^n.
    """
    N = _degree(N)
    w = complex(math.cos(rotation), math.sin(rotation))
    n = np.arange(N + 1)
    c = n * w ** np.maximum(n - 1, 0)
    c[0] = 0

    return TruncatedSeries(c)


def is_univalent_witness(h: TruncatedSeries, tol: float=1e-9) -> bool:
    """
    True when `h` is a truncation of the Koebe function or one of its
    rotations. These are the only univalent functions the de Branges check
    accepts.
    """
    c = h.coeffs
    if c[0] != 0:
        return False
    if h.degree == 0:
        return False
    if abs(c[1] - 1) > tol:
        return False
    if h.degree == 1:
        return True

    w = c[2] / 2
    if abs(abs(w) - 1) > tol:
        return False

    n = np.arange(h.degree + 1)
    expected = n * w ** np.maximum(n - 1, 0)
    expected[0] = 0

    return bool(np.all(np.abs(c - expected) <= tol * np.maximum(1, n)))


def validate_schwarz(phi: TruncatedSeries, tol: float=1e-9, exact: bool=True, samples: int=None) -> bool:
    """
    phi(0) = 0, |phi'(0)| <= 1 + tol, and the certified sup of |phi| on the
    configured circles is at most 1 + tol.

    With `exact` the truncation is the function. Otherwise the tail allowance
    r^{N+1} / (1 - r) of a unit-bounded function is added on each circle.
    """
    c = phi.coeffs
    if c[0] != 0:
        return False
    if abs(phi[1]) > 1 + tol:
        return False

    for r in setting('schwarz', 'validation_radii'):
        bracket = circle_bracket(phi, r, samples=samples, threshold=1 + tol)
        upper = bracket.upper
        if not exact:
            upper += r ** (phi.degree + 1) / (1 - r)
        if upper > 1 + tol:
            return False

    return True


def _disk_point(rng, radius):
    rho = radius * math.sqrt(rng.random())
    theta = 2 * math.pi * rng.random()
    return complex(rho * math.cos(theta), rho * math.sin(theta))


def draw_params(rng, family: str, size: int=None, schwarz: bool=True):
    """
    Draw constructive parameters for one member of `family`.

    Returns `(zeros, rotation)` for Blaschke and `gammas` for Schur. For the
    Schwarz class the first Schur parameter is pinned to 0.
    """
    if family == BLASCHKE:
        if size is None:
            low = 0 if schwarz else 1
            size = int(rng.integers(low, setting('schwarz', 'max_zeros') + 1))
        radius = setting('schwarz', 'blaschke_radius')
        zeros = [_disk_point(rng, radius) for _ in range(size)]
        rotation = 2 * math.pi * rng.random()
        return zeros, rotation

    if family == SCHUR:
        if size is None:
            low = 2 if schwarz else 1
            size = int(rng.integers(low, setting('schwarz', 'max_params') + 1))
        spread = setting('schwarz', 'schur_scale')
        gammas = [_disk_point(rng, spread) for _ in range(size)]
        if schwarz:
            gammas[0] = 0j
        return gammas

    raise ParameterOutOfRange('Unknown family: {}'.format(family))


def build_from_params(family: str, params, N: int=None, schwarz: bool=True) -> TruncatedSeries:
    if family == BLASCHKE:
        zeros, rotation = params
        if schwarz:
            return blaschke_schwarz(zeros, rotation, N)
        return blaschke_bounded(zeros, rotation, N)

    if family == SCHUR:
        return schur_series(params, N)

    raise ParameterOutOfRange('Unknown family: {}'.format(family))


def draw_schwarz(rng, family: str, size: int=None, N: int=None):
    """
    Draw until the truncation passes :func:`validate_schwarz`; returns
    `(params, series)`.
    """
    for attempt in range(setting('schwarz', 'max_redraws')):
        params = draw_params(rng, family, size, schwarz=True)
        phi = build_from_params(family, params, N, schwarz=True)
        if validate_schwarz(phi):
            return params, phi
        logger.debug('Rejected %s sample on attempt %d', family, attempt)

    raise BudgetExhausted('No valid {} Schwarz sample after {} draws'
                          .format(family, setting('schwarz', 'max_redraws')))


def random_schwarz(seed: int, family: str=BLASCHKE, N: int=None, size: int=None) -> TruncatedSeries:
    """
    Deterministic random Schwarz function: a Blaschke product times z with up
    to 8 zeros, or a Schur function with up to 16 parameters and gamma_0 = 0.
    """
    rng = np.random.default_rng(seed)
    _, phi = draw_schwarz(rng, family, size, N)
    return phi


def random_bounded(seed: int, family: str=SCHUR, N: int=None, size: int=None) -> TruncatedSeries:
    """Deterministic random unit-bounded function (not necessarily vanishing at 0)."""
    rng = np.random.default_rng(seed)
    params = draw_params(rng, family, size, schwarz=False)
    return build_from_params(family, params, N, schwarz=False)
