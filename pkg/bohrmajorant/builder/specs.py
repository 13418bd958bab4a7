from typing import Union

from .. import schwarz
from ..errors import SpecSyntaxError, ParameterOutOfRange
from ..series import TruncatedSeries, default_degree
from ..util import format_complex


def _pair(z):
    z = complex(z)
    return [z.real, z.imag]


def _unpair(p):
    try:
        if isinstance(p, (list, tuple)):
            re, im = p
            return complex(float(re), float(im))
        return complex(p)
    except (TypeError, ValueError) as e:
        raise SpecSyntaxError('Malformed complex entry {!r}: {}'.format(p, e))


class FunctionSpec(dict):
    """
    {
        variant: "moebius | blaschke | inner | schur | poly | const | koebe | dilated | series",
        params: "list of parameters, complex numbers as [re, im] pairs",
        degree: "truncation degree N"
    }
    """
    variant = None

    def __init__(self, params, degree: int=None, **kwargs):
        if degree is None:
            degree = default_degree()

        super(FunctionSpec, self).__init__(
            variant=self.variant,
            params=params,
            degree=degree,
            **kwargs
        )

    @property
    def degree(self):
        return self['degree']

    def with_degree(self, degree):
        d = from_json(self)
        d['degree'] = degree
        return d

    def build(self, degree: int=None) -> TruncatedSeries:
        raise NotImplementedError

    def to_text(self):
        raise NotImplementedError

    @property
    def is_polynomial(self):
        return False


class MoebiusSpec(FunctionSpec):
    """(a - z) / (1 - a z), 0 <= a < 1"""
    variant = schwarz.MOEBIUS

    def __init__(self, a, degree: int=None):
        self.a = float(a)
        if not 0 <= self.a < 1:
            raise ParameterOutOfRange('Moebius parameter must satisfy 0 <= a < 1, got {}'.format(self.a))
        super(MoebiusSpec, self).__init__([self.a], degree)

    def build(self, degree: int=None):
        return schwarz.moebius_series(self.a, self.degree if degree is None else degree)

    def to_text(self):
        return 'moebius:{!r}'.format(self.a)


class BlaschkeSpec(FunctionSpec):
    """z e^{i theta} prod (zero_i - z) / (1 - conj(zero_i) z): a Schwarz function"""
    variant = schwarz.BLASCHKE
    vanishes_at_origin = True

    def __init__(self, zeros, rotation: float=0.0, degree: int=None):
        self.zeros = [complex(z) for z in zeros]
        self.rotation = float(rotation)
        for z in self.zeros:
            if abs(z) > 1 - schwarz.ZERO_MARGIN:
                raise ParameterOutOfRange('Blaschke zeros must lie inside the disk, got {}'.format(z))
        super(BlaschkeSpec, self).__init__([_pair(z) for z in self.zeros], degree, rotation=self.rotation)

    def build(self, degree: int=None):
        degree = self.degree if degree is None else degree
        if self.vanishes_at_origin:
            return schwarz.blaschke_schwarz(self.zeros, self.rotation, degree)
        return schwarz.blaschke_bounded(self.zeros, self.rotation, degree)

    def to_text(self):
        return '{}:[{}]@{!r}'.format(self.variant, ','.join(format_complex(z) for z in self.zeros), self.rotation)


class InnerSpec(BlaschkeSpec):
    """e^{i theta} prod (zero_i - z) / (1 - conj(zero_i) z): unit-bounded, unimodular on the circle"""
    variant = 'inner'
    vanishes_at_origin = False


class SchurSpec(FunctionSpec):
    """Unit-bounded function from its Schur parameters"""
    variant = schwarz.SCHUR

    def __init__(self, gammas, degree: int=None):
        self.gammas = [complex(g) for g in gammas]
        if not self.gammas:
            raise ParameterOutOfRange('At least one Schur parameter is required')
        for g in self.gammas:
            if abs(g) > 1:
                raise ParameterOutOfRange('Schur parameters must satisfy |gamma| <= 1, got {}'.format(g))
        super(SchurSpec, self).__init__([_pair(g) for g in self.gammas], degree)

    def build(self, degree: int=None):
        return schwarz.schur_series(self.gammas, self.degree if degree is None else degree)

    def to_text(self):
        return 'schur:[{}]'.format(','.join(format_complex(g) for g in self.gammas))


class PolySpec(FunctionSpec):
    """c_0 + c_1 z + ... + c_d z^d, exact"""
    variant = 'poly'

    def __init__(self, coeffs, degree: int=None):
        self.coeffs = [complex(c) for c in coeffs] or [0j]
        super(PolySpec, self).__init__([_pair(c) for c in self.coeffs], len(self.coeffs) - 1)

    def build(self, degree: int=None):
        return TruncatedSeries(self.coeffs)

    def with_degree(self, degree):
        return self

    @property
    def is_polynomial(self):
        return True

    def to_text(self):
        return 'poly:{}'.format(','.join(format_complex(c) for c in self.coeffs))


class ConstSpec(PolySpec):
    variant = 'const'

    def __init__(self, c, degree: int=None):
        super(ConstSpec, self).__init__([c])

    def to_text(self):
        return 'const:{}'.format(format_complex(self.coeffs[0]))


class KoebeSpec(FunctionSpec):
    """z / (1 - z)^2 and its rotations"""
    variant = 'koebe'

    def __init__(self, rotation: float=0.0, degree: int=None):
        self.rotation = float(rotation)
        super(KoebeSpec, self).__init__([self.rotation], degree)

    def build(self, degree: int=None):
        return schwarz.koebe_series(self.degree if degree is None else degree, self.rotation)

    def to_text(self):
        if self.rotation:
            return 'koebe@{!r}'.format(self.rotation)
        return 'koebe'


class DilatedSpec(FunctionSpec):
    """b * u(z / rho) for an inner spec u; bounded by b on the rho-disk when |u| <= 1"""
    variant = 'dilated'

    def __init__(self, inner: Union[FunctionSpec, dict], b: float, rho: float, degree: int=None):
        if not isinstance(inner, FunctionSpec):
            inner = from_json(inner)
        self.inner = inner
        self.b = float(b)
        self.rho = float(rho)
        if not 0 < self.rho <= 1:
            raise ParameterOutOfRange('rho must lie in (0, 1], got {}'.format(self.rho))
        if self.b <= 0:
            raise ParameterOutOfRange('b must be positive, got {}'.format(self.b))
        if degree is None:
            degree = inner.degree
        super(DilatedSpec, self).__init__([self.b, self.rho], degree, inner=dict(inner))

    def build(self, degree: int=None):
        degree = self.degree if degree is None else degree
        u = self.inner.build(degree)
        n = range(u.degree + 1)
        return TruncatedSeries([self.b * c / self.rho ** k for k, c in zip(n, u.coeffs)])

    def with_degree(self, degree):
        return DilatedSpec(self.inner.with_degree(degree), self.b, self.rho, degree)

    @property
    def is_polynomial(self):
        return self.inner.is_polynomial

    def to_text(self):
        return 'dilated:{!r},{!r}:{}'.format(self.b, self.rho, self.inner.to_text())


class SeriesSpec(FunctionSpec):
    """Raw coefficients, treated as exact"""
    variant = 'series'

    def __init__(self, series: TruncatedSeries, degree: int=None):
        self.series = series
        super(SeriesSpec, self).__init__(series.to_json()['coeffs'], series.degree)

    def build(self, degree: int=None):
        return self.series

    def with_degree(self, degree):
        return self

    @property
    def is_polynomial(self):
        return True

    def to_text(self):
        return 'poly:{}'.format(','.join(format_complex(c) for c in self.series.coeffs))


def from_json(data) -> FunctionSpec:
    """Rebuild a spec from its JSON form (also accepts series JSON)."""
    if isinstance(data, TruncatedSeries):
        return SeriesSpec(data)
    if not isinstance(data, dict):
        raise SpecSyntaxError('Function spec must be a JSON object, got {!r}'.format(data))
    if 'variant' not in data and 'coeffs' in data:
        return SeriesSpec(TruncatedSeries.from_json(data))

    try:
        variant = data['variant']
        params = data.get('params', [])
        degree = data.get('degree', None)

        if variant == schwarz.MOEBIUS:
            return MoebiusSpec(params[0], degree)
        if variant == schwarz.BLASCHKE:
            return BlaschkeSpec([_unpair(p) for p in params], data.get('rotation', 0.0), degree)
        if variant == InnerSpec.variant:
            return InnerSpec([_unpair(p) for p in params], data.get('rotation', 0.0), degree)
        if variant == schwarz.SCHUR:
            return SchurSpec([_unpair(p) for p in params], degree)
        if variant == PolySpec.variant:
            return PolySpec([_unpair(p) for p in params])
        if variant == ConstSpec.variant:
            return ConstSpec(_unpair(params[0]))
        if variant == KoebeSpec.variant:
            return KoebeSpec(params[0] if params else 0.0, degree)
        if variant == DilatedSpec.variant:
            return DilatedSpec(from_json(data['inner']), params[0], params[1], degree)
        if variant == SeriesSpec.variant:
            return SeriesSpec(TruncatedSeries([_unpair(p) for p in params]))
    except (KeyError, IndexError, TypeError) as e:
        raise SpecSyntaxError('Malformed {} spec: {}'.format(data.get('variant'), e))

    raise SpecSyntaxError('Unknown function variant: {!r}'.format(data.get('variant')))


def random_schwarz_spec(rng, family: str=schwarz.BLASCHKE, degree: int=None, size: int=None) -> FunctionSpec:
    """Seeded Schwarz sample, validated, returned as a replayable spec."""
    params, _ = schwarz.draw_schwarz(rng, family, size, degree)
    if family == schwarz.BLASCHKE:
        zeros, rotation = params
        return BlaschkeSpec(zeros, rotation, degree)
    return SchurSpec(params, degree)


def random_bounded_spec(rng, family: str=schwarz.SCHUR, degree: int=None, size: int=None) -> FunctionSpec:
    """Seeded unit-bounded sample (inner Blaschke product or Schur function)."""
    params = schwarz.draw_params(rng, family, size, schwarz=False)
    if family == schwarz.BLASCHKE:
        zeros, rotation = params
        return InnerSpec(zeros, rotation, degree)
    return SchurSpec(params, degree)
