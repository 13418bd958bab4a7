"""
One checker per inequality. Each checker evaluates both sides as certified
brackets and returns an :class:`InequalityReport`.

Polynomial-exact policy: apart from the Bohr and Schwarz-lemma checks, the
truncated inputs are taken to be the functions themselves, so both sides
are exact finite sums and no tail bound is involved. Compositions and
sections are computed only up to the degree that is actually needed, and
those coefficients are exact.
"""
import enum
import logging

from .bohr import CertifiedValue, RadiusParam, bohr_value, polynomial_value, sup_on_circle, circle_bracket
from .errors import InvalidSchwarz, NonzeroInnerConstantTerm, ParameterOutOfRange, NotAUnivalentWitness, SpecSyntaxError
from .presets import setting
from .schwarz import validate_schwarz, is_univalent_witness
from .series import TruncatedSeries, add, scale, mul, compose, section, power, constant

logger = logging.getLogger(__name__)

BOHR_RADIUS = 1 / 3
ROGOSINSKI_RADIUS = 1 / 2


class Verdict(str, enum.Enum):
    HOLDS = 'holds'
    FAILS = 'fails'
    INCONCLUSIVE = 'inconclusive'


class InequalityReport(dict):
    """
    {
        theorem: "checker name",
        verdict: "holds | fails | inconclusive",
        lhs: "certified bracket of the left-hand side",
        rhs: "certified bracket of the right-hand side",
        margin: "rhs.lower - lhs.upper when holding, lhs.lower - rhs.upper when failing",
        witness: "inputs needed to replay the check",
        parts: "sub-reports, for checks made of several inequalities"
    }
    """
    def __init__(self, theorem, verdict, lhs, rhs, margin, witness=None, parts=None, **kwargs):
        super(InequalityReport, self).__init__(
            theorem=theorem,
            verdict=Verdict(verdict).value,
            lhs=lhs,
            rhs=rhs,
            margin=float(margin),
            witness=witness if witness is not None else {},
            **kwargs
        )
        if parts is not None:
            self['parts'] = parts

    @property
    def theorem(self):
        return self['theorem']

    @property
    def verdict(self):
        return Verdict(self['verdict'])

    @property
    def holds(self):
        return self.verdict is Verdict.HOLDS

    @property
    def fails(self):
        return self.verdict is Verdict.FAILS

    @property
    def inconclusive(self):
        return self.verdict is Verdict.INCONCLUSIVE

    @property
    def lhs(self):
        return self['lhs']

    @property
    def rhs(self):
        return self['rhs']

    @property
    def margin(self):
        return self['margin']

    @property
    def witness(self):
        return self['witness']

    @property
    def parts(self):
        return self.get('parts', [])

    def part(self, name):
        for p in self.parts:
            if p.theorem == name:
                return p
        raise KeyError(name)


def decide(lhs: CertifiedValue, rhs: CertifiedValue, tol: float):
    """Verdict and margin for the claim lhs <= rhs."""
    if lhs.upper <= rhs.lower + tol:
        return Verdict.HOLDS, rhs.lower - lhs.upper
    if lhs.lower > rhs.upper + tol:
        return Verdict.FAILS, lhs.lower - rhs.upper
    return Verdict.INCONCLUSIVE, rhs.lower - lhs.upper


def _tol(tol):
    return setting('theorems', 'tol') if tol is None else float(tol)


def _samples(samples):
    return setting('bohr', 'samples') if samples is None else int(samples)


def make_witness(theorem, r, inputs, params=None):
    return {
        'theorem': theorem,
        'r': float(r),
        'params': dict(params or {}),
        'inputs': {role: f.to_json() for role, f in inputs.items()}
    }


def _report(theorem, lhs, rhs, tol, r, inputs, params=None):
    verdict, margin = decide(lhs, rhs, tol)
    params = dict(params or {}, tol=tol)
    report = InequalityReport(theorem, verdict, lhs, rhs, margin, make_witness(theorem, r, inputs, params))
    if verdict is Verdict.HOLDS and abs(margin) <= tol:
        report['equality'] = True
    return report


def _deviation_report(theorem, deviation, allowance, r, inputs, params=None):
    """Equality-type property as the inequality |deviation| <= allowance."""
    lhs = CertifiedValue.point(abs(deviation))
    rhs = CertifiedValue.point(allowance)
    return _report(theorem, lhs, rhs, 0.0, r, inputs, params)


def combine(theorem, parts, witness):
    """Holds iff every part holds; fails if any part fails."""
    failing = [p for p in parts if p.fails]
    pending = [p for p in parts if p.inconclusive]
    if failing:
        chosen = max(failing, key=lambda p: p.margin)
        verdict = Verdict.FAILS
    elif pending:
        chosen = pending[0]
        verdict = Verdict.INCONCLUSIVE
    else:
        chosen = min(parts, key=lambda p: p.margin)
        verdict = Verdict.HOLDS

    return InequalityReport(theorem, verdict, chosen.lhs, chosen.rhs, chosen.margin, witness, parts=parts)


def _require_schwarz(phi, validate=True):
    if phi.coeffs[0] != 0:
        raise NonzeroInnerConstantTerm('phi must vanish at the origin, got phi(0) = {}'.format(complex(phi.coeffs[0])))
    if validate and not validate_schwarz(phi):
        raise InvalidSchwarz('phi is not a Schwarz function on the validation circles')


def check_bohr(f: TruncatedSeries, sup_bound: float=1.0, r=BOHR_RADIUS, tol: float=None,
               exact: bool=False) -> InequalityReport:
    """
    M_r(f) <= sup |f| for |f| <= sup_bound on the disk; holds for r <= 1/3.
    With `exact` the truncation is the whole function and no tail is added.
    """
    r = RadiusParam(r)
    tol = _tol(tol)
    lhs = polynomial_value(f, r) if exact else bohr_value(f, r, sup_bound)
    rhs = CertifiedValue.point(sup_bound)

    return _report('bohr', lhs, rhs, tol, r, {'f': f}, {'sup_bound': float(sup_bound), 'exact': bool(exact)})


def check_rogosinski(f: TruncatedSeries, k: int, r=ROGOSINSKI_RADIUS, tol: float=None,
                     samples: int=None) -> InequalityReport:
    """sup_{|z|=r} |s_k(f)| <= 1 for unit-bounded f; holds for r <= 1/2."""
    r = RadiusParam(r)
    tol = _tol(tol)
    samples = _samples(samples)
    lhs = sup_on_circle(section(f, k), r, samples, threshold=1 + tol)
    rhs = CertifiedValue.point(1.0)

    return _report('rogosinski', lhs, rhs, tol, r, {'f': f}, {'k': int(k), 'samples': samples})


def check_norm_axioms(f: TruncatedSeries, g: TruncatedSeries, alpha: complex, r, tol: float=None) -> InequalityReport:
    """
    The norm and algebra properties of M_r on f, g and alpha:
    (i) positivity and definiteness (for r > 0), (ii) subadditivity,
    (iii) homogeneity, (iv) submultiplicativity, (v) M_r(1) = 1.
    """
    r = RadiusParam(r)
    tol = setting('theorems', 'axiom_tol') if tol is None else float(tol)
    alpha = complex(alpha)
    inputs = {'f': f, 'g': g}
    params = {'alpha': [alpha.real, alpha.imag], 'tol': tol}

    mf = polynomial_value(f, r)
    mg = polynomial_value(g, r)
    zero = CertifiedValue.point(0.0)
    parts = []

    parts.append(_report('positivity', zero, mf, tol, r, inputs))
    # for r > 0, M_r(f) vanishes exactly when f does
    definite = (mf.lower == 0) == f.is_zero() if r > 0 else True
    parts.append(_deviation_report('definiteness', 0.0 if definite else 1.0, 0.0, r, inputs))

    m_sum = polynomial_value(add(f, g), r)
    parts.append(_report('subadditivity', m_sum, CertifiedValue.point(mf.lower + mg.lower), tol, r, inputs))

    m_scaled = polynomial_value(scale(f, alpha), r)
    expected = abs(alpha) * mf.lower
    parts.append(_deviation_report('homogeneity', m_scaled.lower - expected, tol * max(1.0, expected), r, inputs,
                                   {'alpha': params['alpha']}))

    m_prod = polynomial_value(mul(f, g, f.degree + g.degree), r)
    parts.append(_report('submultiplicativity', m_prod, CertifiedValue.point(mf.lower * mg.lower), tol, r, inputs))

    m_one = polynomial_value(constant(1.0), r)
    parts.append(_deviation_report('unit', m_one.lower - 1.0, 0.0, r, {}))

    return combine('norm-axioms', parts, make_witness('norm-axioms', r, inputs, params))


def check_schwarz_majorant(phi: TruncatedSeries, r=BOHR_RADIUS, tol: float=None,
                           validate: bool=True) -> InequalityReport:
    """M_r(phi) <= r for a Schwarz function phi; holds for r <= 1/3."""
    r = RadiusParam(r)
    tol = _tol(tol)
    _require_schwarz(phi, validate)
    lhs = bohr_value(phi, r, 1.0)
    rhs = CertifiedValue.point(r)

    return _report('schwarz-majorant', lhs, rhs, tol, r, {'phi': phi})


def check_subordination(h: TruncatedSeries, phi: TruncatedSeries, r=BOHR_RADIUS, tol: float=None,
                        validate: bool=True) -> InequalityReport:
    """M_r(h o phi) <= M_r(h); holds for r <= 1/3."""
    r = RadiusParam(r)
    tol = _tol(tol)
    _require_schwarz(phi, validate)
    f = compose(h, phi)
    lhs = polynomial_value(f, r)
    rhs = polynomial_value(h, r)

    return _report('subordination', lhs, rhs, tol, r, {'h': h, 'phi': phi})


def check_general_subordination(h: TruncatedSeries, g: TruncatedSeries, phi: TruncatedSeries, b: float,
                                rho: float, r, tol: float=None, validate: bool=True,
                                theorem: str='general-subordination') -> InequalityReport:
    """
    M_r(g * (h o phi)) <= b M_r(h) when |g| <= b on the rho-disk; holds for
    r <= rho / 3. At r = 0 the check is reported as holding without evaluation.
    """
    r = RadiusParam(r)
    tol = _tol(tol)
    b = float(b)
    rho = float(rho)
    if not 0 < rho <= 1:
        raise ParameterOutOfRange('rho must lie in (0, 1], got {}'.format(rho))
    if b <= 0:
        raise ParameterOutOfRange('b must be positive, got {}'.format(b))
    _require_schwarz(phi, validate)

    role = 'psi' if theorem == 'quasi-subordination' else 'g'
    inputs = {'h': h, role: g, 'phi': phi}
    params = {'b': b, 'rho': rho}
    if r == 0:
        point = CertifiedValue.point(0.0)
        report = _report(theorem, point, point, tol, r, inputs, params)
        report['trivial'] = True
        return report

    composed = compose(h, phi)
    f = mul(g, composed, max(g.degree, composed.degree))
    lhs = polynomial_value(f, r)
    m_h = polynomial_value(h, r)
    rhs = CertifiedValue.point(b * m_h.lower)

    return _report(theorem, lhs, rhs, tol, r, inputs, params)


def check_quasi_subordination(h: TruncatedSeries, psi: TruncatedSeries, phi: TruncatedSeries, r=BOHR_RADIUS,
                              tol: float=None, validate: bool=True) -> InequalityReport:
    """M_r(psi * (h o phi)) <= M_r(h) for |psi| <= 1; holds for r <= 1/3."""
    return check_general_subordination(h, psi, phi, 1.0, 1.0, r, tol, validate, theorem='quasi-subordination')


def check_von_neumann_type(h: TruncatedSeries, phi: TruncatedSeries, r=BOHR_RADIUS, tol: float=None,
                           samples: int=None, validate: bool=True) -> InequalityReport:
    """
    M_r(h o phi) <= ||h||_inf on the closed disk; holds for r <= 1/3.
    The verdict rests on the sampled lower bound of ||h||_inf.
    """
    r = RadiusParam(r)
    tol = _tol(tol)
    samples = _samples(samples)
    _require_schwarz(phi, validate)
    lhs = polynomial_value(compose(h, phi), r)
    rhs = circle_bracket(h, 1.0, samples, threshold=lhs.upper)

    return _report('von-neumann', lhs, rhs, tol, r, {'h': h, 'phi': phi}, {'samples': samples})


SECTION_SUP = 'sup'
SECTION_MAJORANT = 'majorant'


def applicable_parts(r):
    parts = []
    if r <= ROGOSINSKI_RADIUS:
        parts.append(SECTION_SUP)
    if r <= BOHR_RADIUS:
        parts.append(SECTION_MAJORANT)
    return parts or [SECTION_SUP, SECTION_MAJORANT]


def check_section_powers(phi: TruncatedSeries, j: int, k: int, r, parts=None, tol: float=None,
                         samples: int=None, validate: bool=True) -> InequalityReport:
    """
    For a Schwarz function phi:
    (A) sup_{|z|=r} |s_k(phi^j)| <= r^j, for r <= 1/2;
    (B) M_r(s_k(phi^j)) <= r^j, for r <= 1/3.

    By default the parts whose radius hypothesis covers r are evaluated, and
    both when r > 1/2.
    """
    r = RadiusParam(r)
    tol = _tol(tol)
    samples = _samples(samples)
    if j < 1:
        raise ParameterOutOfRange('Power j must be at least 1, got {}'.format(j))
    _require_schwarz(phi, validate)
    if parts is None:
        parts = applicable_parts(r)
    parts = list(parts)

    q = section(power(phi, j, k), k)
    rhs = CertifiedValue.point(r ** j)
    inputs = {'phi': phi}
    params = {'j': int(j), 'k': int(k), 'parts': parts, 'samples': samples, 'tol': tol}

    reports = []
    if SECTION_SUP in parts:
        lhs = sup_on_circle(q, r, samples, threshold=rhs.lower + tol)
        reports.append(_report('section-powers-sup', lhs, rhs, tol, r, inputs))
    if SECTION_MAJORANT in parts:
        reports.append(_report('section-powers-majorant', polynomial_value(q, r), rhs, tol, r, inputs))
    if not reports:
        raise ParameterOutOfRange('Unknown section-power parts: {}'.format(parts))

    return combine('section-powers', reports, make_witness('section-powers', r, inputs, params))


def check_section_sup(h: TruncatedSeries, phi: TruncatedSeries, k: int, r=ROGOSINSKI_RADIUS, tol: float=None,
                      samples: int=None, validate: bool=True) -> InequalityReport:
    """sup_{|z|=r} |s_k(h o phi)| <= M_r(s_k(h)); holds for r <= 1/2."""
    r = RadiusParam(r)
    tol = _tol(tol)
    samples = _samples(samples)
    _require_schwarz(phi, validate)
    rhs = polynomial_value(section(h, k), r)
    lhs = sup_on_circle(compose(h, phi, k), r, samples, threshold=rhs.lower + tol)

    return _report('section-sup', lhs, rhs, tol, r, {'h': h, 'phi': phi}, {'k': int(k), 'samples': samples})


def check_section_majorant(h: TruncatedSeries, phi: TruncatedSeries, k: int, r=BOHR_RADIUS, tol: float=None,
                           validate: bool=True) -> InequalityReport:
    """M_r(s_k(h o phi)) <= M_r(s_k(h)); holds for r <= 1/3."""
    r = RadiusParam(r)
    tol = _tol(tol)
    _require_schwarz(phi, validate)
    lhs = polynomial_value(compose(h, phi, k), r)
    rhs = polynomial_value(section(h, k), r)

    return _report('section-majorant', lhs, rhs, tol, r, {'h': h, 'phi': phi}, {'k': int(k)})


def check_section_chain(h: TruncatedSeries, phi: TruncatedSeries, k: int, r, tol: float=None,
                        validate: bool=True) -> InequalityReport:
    """M_r(s_k(f)) <= M_r(f) <= M_r(h) for f = h o phi; holds for r < 1/3."""
    r = RadiusParam(r)
    tol = _tol(tol)
    _require_schwarz(phi, validate)
    f = compose(h, phi)
    m_section = polynomial_value(section(f, k), r)
    m_f = polynomial_value(f, r)
    m_h = polynomial_value(h, r)
    inputs = {'h': h, 'phi': phi}

    parts = [
        _report('section-chain-section', m_section, m_f, tol, r, inputs),
        _report('section-chain-subordination', m_f, m_h, tol, r, inputs)
    ]

    return combine('section-chain', parts, make_witness('section-chain', r, inputs, {'k': int(k), 'tol': tol}))


def check_coefficient_growth(h: TruncatedSeries, tol: float=None) -> InequalityReport:
    """|b_n| <= n |b_1| for every known coefficient of a univalent witness."""
    tol = _tol(tol)
    b1 = abs(h[1])
    ratios = [abs(h[n]) / n for n in range(1, h.degree + 1)] or [0.0]
    lhs = CertifiedValue.point(max(ratios))
    rhs = CertifiedValue.point(b1)

    return _report('coefficient-growth', lhs, rhs, tol, 0.0, {'h': h})


DEBRANGES_SUP = 'sup'
DEBRANGES_MAJORANT = 'majorant'


def check_debranges_bound(h: TruncatedSeries, phi: TruncatedSeries, k: int, r, mode: str=DEBRANGES_MAJORANT,
                          tol: float=None, samples: int=None, validate: bool=True) -> InequalityReport:
    """
    For univalent h and f = h o phi:
    sup_{|z|=r} |s_k(f)| <= |b_0| + k(k+1)/2 |b_1| for r <= 1/2 (mode sup), and
    M_r(s_k(f)) <= |b_0| + k(k+1)/2 |b_1| for r <= 1/3 (mode majorant).
    """
    r = RadiusParam(r)
    tol = _tol(tol)
    samples = _samples(samples)
    if not is_univalent_witness(h):
        raise NotAUnivalentWitness('h is not the Koebe function or one of its rotations')
    if mode not in (DEBRANGES_SUP, DEBRANGES_MAJORANT):
        raise ParameterOutOfRange('mode must be sup or majorant, got {}'.format(mode))
    _require_schwarz(phi, validate)

    rhs = CertifiedValue.point(abs(h[0]) + k * (k + 1) / 2 * abs(h[1]))
    q = compose(h, phi, k)
    if mode == DEBRANGES_SUP:
        lhs = sup_on_circle(q, r, samples, threshold=rhs.lower + tol)
    else:
        lhs = polynomial_value(q, r)

    return _report('debranges-' + mode, lhs, rhs, tol, r, {'h': h, 'phi': phi},
                   {'k': int(k), 'mode': mode, 'samples': samples})


CHECKS = {
    'bohr': (check_bohr, ('f',)),
    'rogosinski': (check_rogosinski, ('f',)),
    'norm-axioms': (check_norm_axioms, ('f', 'g')),
    'schwarz-majorant': (check_schwarz_majorant, ('phi',)),
    'subordination': (check_subordination, ('h', 'phi')),
    'general-subordination': (check_general_subordination, ('h', 'g', 'phi')),
    'quasi-subordination': (check_quasi_subordination, ('h', 'psi', 'phi')),
    'von-neumann': (check_von_neumann_type, ('h', 'phi')),
    'section-powers': (check_section_powers, ('phi',)),
    'section-sup': (check_section_sup, ('h', 'phi')),
    'section-majorant': (check_section_majorant, ('h', 'phi')),
    'section-chain': (check_section_chain, ('h', 'phi')),
    'debranges': (check_debranges_bound, ('h', 'phi')),
    'debranges-sup': (check_debranges_bound, ('h', 'phi')),
    'debranges-majorant': (check_debranges_bound, ('h', 'phi')),
    'coefficient-growth': (check_coefficient_growth, ('h',)),
}


def run_check(theorem: str, r, inputs: dict, **params) -> InequalityReport:
    """Dispatch by name; `inputs` maps roles to series."""
    try:
        check, roles = CHECKS[theorem]
    except KeyError:
        raise ParameterOutOfRange('Unknown theorem: {}'.format(theorem))

    kwargs = {role: inputs[role] for role in roles}
    if 'alpha' in params and isinstance(params['alpha'], (list, tuple)):
        params['alpha'] = complex(*params['alpha'])
    if theorem.startswith('debranges-'):
        params['mode'] = theorem.split('-', 1)[1]
    if theorem == 'coefficient-growth':
        return check(**kwargs, **params)

    return check(r=r, **kwargs, **params)


def replay(witness: dict) -> InequalityReport:
    """Re-run the check recorded in a witness."""
    try:
        theorem = witness['theorem']
        r = witness['r']
        params = dict(witness.get('params', {}))
        inputs = {role: TruncatedSeries.from_json(data) for role, data in witness['inputs'].items()}
    except (KeyError, TypeError) as e:
        raise SpecSyntaxError('Malformed witness: {}'.format(e))

    if theorem == 'quasi-subordination':
        params.pop('b', None)
        params.pop('rho', None)

    return run_check(theorem, r, inputs, **params)
