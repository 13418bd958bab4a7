import numpy as np
import pytest

from bohrmajorant.errors import NonzeroInnerConstantTerm, ZeroConstantTerm, NonFiniteCoefficient, SpecSyntaxError
from bohrmajorant.schwarz import moebius_series
from bohrmajorant.series import TruncatedSeries, from_coeffs, constant, identity, monomial, zero, \
    add, scale, mul, power, shift, compose, reciprocal, section, evaluate

from tests.conftest import brute_mul, brute_compose


def random_series(rng, degree):
    return TruncatedSeries(rng.uniform(-1, 1, degree + 1) + 1j * rng.uniform(-1, 1, degree + 1))


def test_construction_pads_and_cuts():
    f = TruncatedSeries([1, 2], degree=4)
    assert f.degree == 4
    assert list(f.coeffs) == [1, 2, 0, 0, 0]
    assert TruncatedSeries([1, 2, 3], degree=1) == from_coeffs(1, 2)
    assert TruncatedSeries([]).degree == 0


def test_rejects_non_finite():
    with pytest.raises(NonFiniteCoefficient):
        TruncatedSeries([1, np.nan])
    with pytest.raises(NonFiniteCoefficient):
        TruncatedSeries([np.inf])


def test_immutable():
    f = from_coeffs(1, 2)
    with pytest.raises(ValueError):
        f.coeffs[0] = 5


def test_equality_is_exact():
    assert from_coeffs(1, 2) == from_coeffs(1, 2)
    assert from_coeffs(1, 2) != from_coeffs(1, 2 + 1e-16j)
    assert from_coeffs(1, 2) != TruncatedSeries([1, 2], degree=2)
    assert hash(from_coeffs(1, 2)) == hash(from_coeffs(1, 2))


def test_getitem_above_degree():
    f = from_coeffs(1, 2)
    assert f[1] == 2
    assert f[7] == 0


def test_add():
    assert add(from_coeffs(1, 1), from_coeffs(1, -1)) == from_coeffs(2, 0)
    f = from_coeffs(0.5, 0.25, 3)
    assert add(f, zero()) == f
    assert add(constant(0.5), from_coeffs(0, 0.5)) == from_coeffs(0.5, 0.5)


def test_operators():
    z = identity()
    assert (1 + z) * (1 - z) == from_coeffs(1, 0, -1)
    assert -z == from_coeffs(0, -1)
    assert 2 * z == from_coeffs(0, 2)


def test_mul_examples():
    assert mul(from_coeffs(1, 1), from_coeffs(1, -1)) == from_coeffs(1, 0, -1)
    assert mul(from_coeffs(1, 1), from_coeffs(1, 1)) == from_coeffs(1, 2, 1)
    f = from_coeffs(0.3, -0.2j, 1.5)
    assert mul(f, constant(1.0)) == f


def test_mul_default_degree_is_capped():
    f = TruncatedSeries(np.ones(60))
    assert mul(f, f).degree == 64
    g = TruncatedSeries(np.ones(100))
    assert mul(g, from_coeffs(1, 1)).degree == 99
    assert mul(from_coeffs(1, 1), from_coeffs(1, 1, 1)).degree == 3


@pytest.mark.parametrize('seed', range(200))
def test_mul_matches_convolution_oracle(seed):
    rng = np.random.default_rng(seed)
    f = random_series(rng, int(rng.integers(0, 33)))
    g = random_series(rng, int(rng.integers(0, 33)))
    degree = f.degree + g.degree

    assert list(mul(f, g, degree).coeffs) == brute_mul(f.coeffs, g.coeffs, degree)


def test_power():
    assert power(from_coeffs(1, 1), 2) == from_coeffs(1, 2, 1)
    assert power(from_coeffs(1, 1), 0, 3) == constant(1.0, 3)
    with pytest.raises(ValueError):
        power(from_coeffs(1, 1), -1)


def test_shift():
    assert shift(from_coeffs(1, 2)) == from_coeffs(0, 1, 2)
    assert shift(from_coeffs(1, 2), 2, 2) == from_coeffs(0, 0, 1)


def test_compose_monomial_substitution():
    h = from_coeffs(1, 1, 1)
    phi = monomial(2)
    assert compose(h, phi) == from_coeffs(1, 0, 1, 0, 1)


def test_compose_geometric():
    h = TruncatedSeries(np.ones(5))
    phi = from_coeffs(0, 0.5)
    assert compose(h, phi) == from_coeffs(1, 0.5, 0.25, 0.125, 0.0625)


def test_compose_moebius_with_square():
    h = moebius_series(0.5, 64)
    f = compose(h, monomial(2))
    assert f.degree == 64
    for n in range(33):
        assert f[2 * n] == h[n]
        if 2 * n + 1 <= 64:
            assert f[2 * n + 1] == 0


@pytest.mark.parametrize('seed', range(200))
def test_compose_matches_oracle(seed):
    rng = np.random.default_rng(100 + seed)
    h = random_series(rng, int(rng.integers(1, 33)))
    phi_coeffs = random_series(rng, int(rng.integers(1, 33))).coeffs.copy()
    phi_coeffs[0] = 0
    phi = TruncatedSeries(phi_coeffs)
    degree = 32

    assert list(compose(h, phi, degree).coeffs) == brute_compose(h.coeffs, phi.coeffs, degree)


def test_compose_rejects_nonzero_constant():
    with pytest.raises(NonzeroInnerConstantTerm):
        compose(from_coeffs(1, 1), from_coeffs(0.1, 1))


def test_reciprocal_examples():
    g = reciprocal(from_coeffs(1, -1), 10)
    assert np.all(g.coeffs == 1)
    g = reciprocal(from_coeffs(1, 1), 10)
    assert list(g.coeffs.real) == [(-1) ** n for n in range(11)]
    assert reciprocal(constant(2)) == constant(0.5)


def test_reciprocal_rejects_zero_constant():
    with pytest.raises(ZeroConstantTerm):
        reciprocal(from_coeffs(0, 1))


@pytest.mark.parametrize('seed', range(5))
def test_reciprocal_residual(seed):
    rng = np.random.default_rng(200 + seed)
    f = random_series(rng, int(rng.integers(1, 65)))
    c = f.coeffs.copy()
    c[0] = 0.5 + 0.5 * rng.random() + 0.2j
    c[1:] *= 0.25 / max(1.0, np.sum(np.abs(c[1:])))
    f = TruncatedSeries(c)
    g = reciprocal(f)

    residual = mul(f, g, g.degree).coeffs - constant(1.0, g.degree).coeffs
    assert np.max(np.abs(residual)) <= 1e-12


def test_section():
    f = from_coeffs(1, 2, 3, 4)
    assert section(f, 2) == from_coeffs(1, 2, 3)
    assert section(f, 0) == constant(1)
    assert section(f, 10) is f
    assert section(section(f, 2), 2) == section(f, 2)
    with pytest.raises(ValueError):
        section(f, -1)


def test_section_is_linear():
    rng = np.random.default_rng(7)
    f, g = random_series(rng, 10), random_series(rng, 10)
    assert section(add(f, g), 4) == add(section(f, 4), section(g, 4))


def test_scale_and_evaluate():
    f = from_coeffs(1, 2, 3)
    assert scale(f, 1j) == from_coeffs(1j, 2j, 3j)
    assert evaluate(f, 0.5) == pytest.approx(1 + 1 + 0.75)
    np.testing.assert_allclose(f(np.array([0, 1])), [1, 6])


def test_json():
    f = from_coeffs(1, 0.5 - 0.25j)
    data = f.to_json()
    assert data == {'degree': 1, 'coeffs': [[1.0, 0.0], [0.5, -0.25]]}
    assert TruncatedSeries.from_json(data) == f


def test_json_rejects_malformed():
    with pytest.raises(SpecSyntaxError):
        TruncatedSeries.from_json({'degree': 2, 'coeffs': [[1, 0]]})
    with pytest.raises(SpecSyntaxError):
        TruncatedSeries.from_json({'coeffs': 'nope'})
