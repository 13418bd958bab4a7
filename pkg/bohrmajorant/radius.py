"""
Validity radii and sharpness witnesses.

A :class:`Predicate` is a named check with every input except r fixed. The
inputs are kept as function specs so that they can be rebuilt at a higher
truncation degree when a verdict is inconclusive. :func:`validity_radius`
scans a uniform r-grid and bisects the first cell that goes from holding to
failing. For predicates that are not monotone in r the result is the first
failure the scan finds. This is an upper estimate of the true infimum that
depends on the grid resolution.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .builder.specs import FunctionSpec, MoebiusSpec, BlaschkeSpec, from_json
from .errors import BudgetExhausted, ParameterOutOfRange
from .presets import setting, get_section
from .theorems import CHECKS, Verdict, run_check

logger = logging.getLogger(__name__)

SAMPLED_CHECKS = {'rogosinski', 'von-neumann', 'section-powers', 'section-sup',
                  'debranges', 'debranges-sup', 'debranges-majorant'}


class Predicate:
    """
    A theorem name plus fixed inputs (role -> FunctionSpec) and keyword
    parameters. Calling it with a radius runs the check.
    """
    def __init__(self, theorem: str, inputs: dict, **params):
        if theorem not in CHECKS:
            raise ParameterOutOfRange('Unknown theorem: {}'.format(theorem))
        _, roles = CHECKS[theorem]
        missing = [role for role in roles if role not in inputs]
        if missing:
            raise ParameterOutOfRange('{} needs inputs {}'.format(theorem, ', '.join(missing)))

        self.theorem = theorem
        self.inputs = {role: spec if isinstance(spec, FunctionSpec) else from_json(spec)
                       for role, spec in inputs.items() if role in roles}
        self.params = params
        if theorem == 'bohr' and 'exact' not in params:
            self.params['exact'] = self.inputs['f'].is_polynomial
        self._cache = {}

    def series(self, degree: int=None):
        if degree not in self._cache:
            built = {}
            for role, spec in self.inputs.items():
                if degree is not None and degree > spec.degree:
                    spec = spec.with_degree(degree)
                built[role] = spec.build()
            self._cache[degree] = built
        return self._cache[degree]

    def __call__(self, r, degree: int=None, samples: int=None, **overrides):
        params = dict(self.params, **overrides)
        if samples is not None and self.theorem in SAMPLED_CHECKS:
            params['samples'] = samples

        report = run_check(self.theorem, r, self.series(degree), **params)
        report['witness']['specs'] = {role: dict(spec) for role, spec in self.inputs.items()}
        return report

    def ladder(self):
        ladder = get_section('radius')['ladder']
        return list(itertools.product(ladder['degree'], ladder['samples']))

    def evaluate(self, r, **overrides):
        """Run the check, climbing the precision ladder while it is inconclusive."""
        report = None
        for degree, samples in self.ladder():
            report = self(r, degree, samples, **overrides)
            if not report.inconclusive:
                return report
            logger.info('Inconclusive %s at r=%.12g, escalating past degree %d with %d samples',
                        self.theorem, r, degree, samples)
        return report


class RadiusResult(dict):
    """
    {
        theorem: "checker name",
        radius_low: "largest radius known to hold",
        radius_high: "smallest radius known to fail (1 when none found)",
        never_fails: "true when no radius in (0, r_max] fails",
        evaluations: "number of check evaluations",
        first_failure_witness: "witness of the failing check at radius_high",
        boundary: "why the scan stopped: fails | inconclusive | r_max"
    }
    """
    def __init__(self, theorem, radius_low, radius_high, evaluations, first_failure_witness=None,
                 never_fails=False, boundary='fails'):
        if not 0 <= radius_low <= radius_high <= 1:
            raise ValueError('Invalid radius bracket [{}, {}]'.format(radius_low, radius_high))
        super(RadiusResult, self).__init__(
            theorem=theorem,
            radius_low=float(radius_low),
            radius_high=float(radius_high),
            never_fails=bool(never_fails),
            evaluations=int(evaluations),
            first_failure_witness=first_failure_witness,
            boundary=boundary
        )

    @property
    def radius_low(self):
        return self['radius_low']

    @property
    def radius_high(self):
        return self['radius_high']

    @property
    def never_fails(self):
        return self['never_fails']

    @property
    def evaluations(self):
        return self['evaluations']

    @property
    def width(self):
        return self.radius_high - self.radius_low

    def contains(self, r):
        return self.radius_low <= r <= self.radius_high


def _scan(predicate, radii, tol, threads):
    def evaluate(r):
        return predicate.evaluate(r, tol=tol)

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            yield from executor.map(evaluate, radii)
    else:
        yield from map(evaluate, radii)


def validity_radius(predicate: Predicate, r_max: float=None, grid: int=None, bisect_tol: float=None,
                    tol: float=None, threads: int=None) -> RadiusResult:
    """
    Bracket the first radius in (0, r_max] at which the predicate fails.

    A grid point that stays inconclusive along the whole precision ladder
    ends the scan, and the result is flagged with boundary "inconclusive".
    A bisection midpoint that stays inconclusive raises BudgetExhausted.
    """
    config = get_section('radius')
    r_max = config['r_max'] if r_max is None else float(r_max)
    grid = config['grid'] if grid is None else int(grid)
    bisect_tol = config['bisect_tol'] if bisect_tol is None else float(bisect_tol)
    tol = config['tol'] if tol is None else float(tol)
    if grid < 16:
        raise ParameterOutOfRange('grid must be at least 16, got {}'.format(grid))
    if not 0 < r_max < 1:
        raise ParameterOutOfRange('r_max must lie in (0, 1), got {}'.format(r_max))

    radii = [r_max * i / grid for i in range(1, grid + 1)]
    low = 0.0
    evaluations = 0
    failing = None
    for r, report in zip(radii, _scan(predicate, radii, tol, threads)):
        evaluations += 1
        logger.debug('Scan %s r=%.9g: %s', predicate.theorem, r, report['verdict'])
        if report.holds:
            low = r
            continue
        if report.inconclusive:
            return RadiusResult(predicate.theorem, low, r, evaluations, boundary='inconclusive')
        failing = (r, report)
        break

    if failing is None:
        return RadiusResult(predicate.theorem, low, 1.0, evaluations, never_fails=True, boundary='r_max')

    high, report = failing
    while high - low > bisect_tol:
        mid = (low + high) / 2
        mid_report = predicate.evaluate(mid, tol=tol)
        evaluations += 1
        logger.debug('Bisect %s r=%.12g: %s', predicate.theorem, mid, mid_report['verdict'])
        if mid_report.holds:
            low = mid
        elif mid_report.fails:
            high, report = mid, mid_report
        else:
            raise BudgetExhausted('{} stays inconclusive at r={!r} after the precision ladder'
                                  .format(predicate.theorem, mid))

    return RadiusResult(predicate.theorem, low, high, evaluations, report.witness)


class ParametricFamily:
    """A one-parameter curve of function specs over [lo, hi]."""
    name = None

    def __init__(self, lo: float=0.0, hi: float=None, degree: int=None):
        self.lo = float(lo)
        self.hi = setting('sharpness', 'moebius_max') if hi is None else float(hi)
        self.degree = degree
        if not self.lo <= self.hi:
            raise ParameterOutOfRange('Empty parameter range [{}, {}]'.format(self.lo, self.hi))

    def spec(self, a: float) -> FunctionSpec:
        raise NotImplementedError

    def grid(self, points: int):
        if points < 2:
            return [self.lo]
        return [float(a) for a in np.linspace(self.lo, self.hi, points)]


class MoebiusFamily(ParametricFamily):
    """(a - z) / (1 - a z) for a in [lo, hi]"""
    name = 'moebius'

    def spec(self, a):
        return MoebiusSpec(a, self.degree)


class BlaschkeFamily(ParametricFamily):
    """z (a - z) / (1 - a z): a one-zero Blaschke product times z"""
    name = 'blaschke'

    def spec(self, a):
        return BlaschkeSpec([a], 0.0, self.degree)


FAMILIES = {
    MoebiusFamily.name: MoebiusFamily,
    BlaschkeFamily.name: BlaschkeFamily,
}


def closed_form_bohr_radius(a: float) -> float:
    """Radius at which M_r of the Moebius function with parameter a reaches 1."""
    return 1 / (1 + 2 * a)


def closed_form_rogosinski_radius(a: float) -> float:
    """Radius at which the first section a - (1 - a^2) z of the Moebius function reaches 1."""
    return 1 / (1 + a)


class SharpnessWitness(dict):
    """
    {
        theorem: "checker name",
        family: "family name",
        parameter: "first grid parameter whose check fails",
        r: "radius",
        margin: "certified failure margin",
        lhs: "left-hand side bracket",
        rhs: "right-hand side bracket",
        witness: "replayable witness of the failing check",
        evaluations: "grid points evaluated"
    }
    """
    @property
    def parameter(self):
        return self['parameter']

    @property
    def margin(self):
        return self['margin']


def sharpness_search(theorem: str, family: ParametricFamily, r, param_grid: int=None, role: str=None,
                     inputs: dict=None, **params):
    """
    Walk the family's parameter grid from lo to hi and return the first
    member whose check at radius r fails, or None when the whole grid holds.
    Inconclusive members are skipped.
    """
    param_grid = setting('sharpness', 'grid') if param_grid is None else int(param_grid)
    if role is None:
        role = CHECKS[theorem][1][0]

    fixed = dict(inputs or {})
    evaluations = 0
    for a in family.grid(param_grid):
        fixed[role] = family.spec(a)
        report = Predicate(theorem, fixed, **params)(r)
        evaluations += 1
        logger.debug('Sharpness %s %s(%.9g) at r=%.9g: %s', theorem, family.name, a, r, report['verdict'])
        if report.fails:
            logger.info('%s fails for %s(%r) at r=%r', theorem, family.name, a, r)
            return SharpnessWitness(
                theorem=theorem,
                family=family.name,
                parameter=a,
                r=float(r),
                margin=report.margin,
                lhs=report.lhs,
                rhs=report.rhs,
                witness=report.witness,
                evaluations=evaluations
            )

    return None
