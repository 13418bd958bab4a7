"""
Truncated power series with complex double-precision coefficients.

A :class:`TruncatedSeries` of degree ``N`` holds ``a_0 .. a_N`` of
``f(z) = a_0 + a_1 z + ... + a_N z^N``. Coefficients above ``N`` are not
known; operations that produce them (products, composition) take an
explicit output degree so the truncation is visible at the call site.

Products are accumulated over real and imaginary parts separately, in
ascending order of the left factor's index. Every coefficient is therefore
a fixed sequence of IEEE operations, and a plain double loop written the
same way reproduces it bit for bit.
"""
import numpy as np

from .errors import NonzeroInnerConstantTerm, ZeroConstantTerm, NonFiniteCoefficient, SpecSyntaxError
from .presets import setting


class TruncatedSeries:
    """
    Coefficients ``a_0 .. a_N`` of an analytic function, exact up to ``N``.

    :param coeffs: sequence of complex numbers (index n is the coefficient of z^n)
    :param degree: pad with zeros or cut to this degree (optional)
    """
    __slots__ = ('_coeffs',)

    def __init__(self, coeffs, degree: int=None):
        c = np.array(coeffs, dtype=complex).reshape(-1)
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        if degree is not None:
            if degree < 0:
                raise ValueError('degree cannot be negative: {}'.format(degree))
            if degree + 1 <= c.size:
                c = c[:degree + 1].copy()
            else:
                c = np.concatenate([c, np.zeros(degree + 1 - c.size, dtype=complex)])
        if not np.all(np.isfinite(c)):
            raise NonFiniteCoefficient('Series coefficients must be finite')

        c.flags.writeable = False
        self._coeffs = c

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return self._coeffs.size - 1

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self._coeffs[n]
        if n < 0:
            raise IndexError(n)
        if n > self.degree:
            return 0j
        return complex(self._coeffs[n])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.degree == other.degree and bool(np.array_equal(self._coeffs, other._coeffs))

    def __hash__(self):
        return hash((self.degree, self._coeffs.tobytes()))

    def __repr__(self):
        return 'TruncatedSeries({}, degree={})'.format(self._coeffs.tolist(), self.degree)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = constant(other)
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return scale(self, -1.0)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = constant(other)
        return add(self, -other)

    def __rsub__(self, other):
        return add(constant(other), -self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __call__(self, z):
        return evaluate(self, z)

    def is_zero(self):
        return not np.any(self._coeffs)

    def to_json(self):
        return {
            'degree': self.degree,
            'coeffs': [[float(c.real), float(c.imag)] for c in self._coeffs]
        }

    @classmethod
    def from_json(cls, data):
        try:
            coeffs = [complex(float(re), float(im)) for re, im in data['coeffs']]
            degree = int(data['degree'])
        except (KeyError, TypeError, ValueError) as e:
            raise SpecSyntaxError('Malformed series JSON: {}'.format(e))

        if len(coeffs) != degree + 1:
            raise SpecSyntaxError('Series JSON declares degree {} but carries {} coefficients'
                                  .format(degree, len(coeffs)))

        return cls(coeffs)


def default_degree():
    return setting('series', 'degree')


def from_coeffs(*coeffs):
    return TruncatedSeries(list(coeffs))


def zero(degree: int=0):
    return TruncatedSeries([], degree=degree)


def constant(c, degree: int=0):
    return TruncatedSeries([c], degree=degree)


def identity(degree: int=1):
    return TruncatedSeries([0, 1], degree=max(degree, 1))


def monomial(n: int, c=1.0, degree: int=None):
    if degree is None:
        degree = n
    return TruncatedSeries([0] * n + [c], degree=degree)


def _join(re, im):
    c = np.empty(re.shape, dtype=complex)
    c.real = re
    c.imag = im
    return c


def _cmul(ar, ai, br, bi):
    return ar * br - ai * bi, ar * bi + ai * br


def _product_degree(f, g):
    cap = max(default_degree(), f.degree, g.degree)
    return min(f.degree + g.degree, cap)


def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    degree = max(f.degree, g.degree)
    c = np.zeros(degree + 1, dtype=complex)
    c[:f.degree + 1] += f.coeffs
    c[:g.degree + 1] += g.coeffs

    return TruncatedSeries(c)


def scale(f: TruncatedSeries, alpha) -> TruncatedSeries:
    alpha = complex(alpha)
    a = f.coeffs
    re, im = _cmul(alpha.real, alpha.imag, a.real, a.imag)

    return TruncatedSeries(_join(re, im))


def mul(f: TruncatedSeries, g: TruncatedSeries, degree: int=None) -> TruncatedSeries:
    """
    Truncated Cauchy product, c_n = sum_{j=0}^{n} a_j b_{n-j} for n <= degree.

    The default output degree is deg f + deg g, capped at the configured
    series degree (or the larger operand degree when that is higher).
    """
    if degree is None:
        degree = _product_degree(f, g)

    a = f.coeffs
    br, bi = g.coeffs.real, g.coeffs.imag
    cr = np.zeros(degree + 1)
    ci = np.zeros(degree + 1)

    for j in range(min(f.degree, degree) + 1):
        m = min(g.degree, degree - j)
        pr, pi = _cmul(a[j].real, a[j].imag, br[:m + 1], bi[:m + 1])
        cr[j:j + m + 1] += pr
        ci[j:j + m + 1] += pi

    return TruncatedSeries(_join(cr, ci))


def power(f: TruncatedSeries, j: int, degree: int=None) -> TruncatedSeries:
    if j < 0:
        raise ValueError('Negative powers are not supported: {}'.format(j))
    if degree is None:
        degree = min(f.degree * j, max(default_degree(), f.degree))

    p = constant(1.0, degree)
    for _ in range(j):
        p = mul(p, f, degree)

    return p


def shift(f: TruncatedSeries, k: int=1, degree: int=None) -> TruncatedSeries:
    """z^k * f"""
    if degree is None:
        degree = f.degree + k
    return TruncatedSeries(np.concatenate([np.zeros(k, dtype=complex), f.coeffs]), degree=degree)


def compose_degree(h: TruncatedSeries, phi: TruncatedSeries):
    return min(h.degree * phi.degree, max(default_degree(), phi.degree))


def compose(h: TruncatedSeries, phi: TruncatedSeries, degree: int=None) -> TruncatedSeries:
    """
    h(phi(z)) up to `degree`, where phi(0) = 0.

    Accumulates b_n * phi^n with phi^n built by repeated truncated products.
    Since phi^n starts at z^n, terms with n > degree are never needed.
    The default degree is deg h * deg phi, capped at the larger of the
    configured series degree and deg phi.
    """
    if phi.coeffs[0] != 0:
        raise NonzeroInnerConstantTerm('Inner function must vanish at the origin, got phi(0) = {}'
                                       .format(complex(phi.coeffs[0])))
    if degree is None:
        degree = compose_degree(h, phi)

    acc = zero(degree)
    p = constant(1.0, degree)
    for n in range(min(h.degree, degree) + 1):
        if n > 0:
            p = mul(p, phi, degree)
        acc = add(acc, scale(p, h.coeffs[n]))

    return acc


def reciprocal(f: TruncatedSeries, degree: int=None) -> TruncatedSeries:
    """g with f*g = 1 + O(z^{degree+1})"""
    a = f.coeffs
    if a[0] == 0:
        raise ZeroConstantTerm('Cannot invert a series with zero constant term')
    if degree is None:
        degree = max(f.degree, default_degree()) if f.degree > 0 else 0

    g = np.zeros(degree + 1, dtype=complex)
    g[0] = 1 / a[0]
    for n in range(1, degree + 1):
        m = min(n, f.degree)
        s = np.dot(a[1:m + 1], g[n - 1::-1][:m])
        g[n] = -s * g[0]

    return TruncatedSeries(g)


def section(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """s_k(f) = a_0 + a_1 z + ... + a_k z^k"""
    if k < 0:
        raise ValueError('Section index cannot be negative: {}'.format(k))
    if k >= f.degree:
        return f
    return TruncatedSeries(f.coeffs[:k + 1])


def evaluate(f: TruncatedSeries, z):
    """Horner evaluation; `z` may be a scalar or an array of points."""
    return np.polynomial.polynomial.polyval(z, f.coeffs)
