import json

import numpy as np
import pytest

from bohrmajorant.builder import parse_function, from_json, RunConfig, MoebiusSpec, BlaschkeSpec, InnerSpec, \
    SchurSpec, PolySpec, ConstSpec, KoebeSpec, DilatedSpec, SeriesSpec, random_schwarz_spec
from bohrmajorant.errors import SpecSyntaxError, ParameterOutOfRange
from bohrmajorant.schwarz import moebius_series, blaschke_schwarz, koebe_series, validate_schwarz, SCHUR
from bohrmajorant.series import from_coeffs, constant


def test_parse_moebius():
    spec = parse_function('moebius:0.5')
    assert isinstance(spec, MoebiusSpec)
    assert spec.degree == 64
    assert spec.build() == moebius_series(0.5, 64)
    assert parse_function('moebius:0.5', degree=8).build().degree == 8


def test_parse_blaschke_and_inner():
    spec = parse_function('blaschke:[0.5,0.1-0.2i]@0.3')
    assert spec.zeros == [0.5, 0.1 - 0.2j]
    assert spec.rotation == 0.3
    assert parse_function('blaschke:[0.5]').build() == blaschke_schwarz([0.5], 0, 64)
    assert parse_function('blaschke:[]').build()[1] == 1

    inner = parse_function('inner:[0.5]')
    assert isinstance(inner, InnerSpec)
    assert inner.build()[0] == 0.5


def test_parse_poly_and_const():
    spec = parse_function('poly:1,0.5i,-2')
    assert spec.is_polynomial
    assert spec.build() == from_coeffs(1, 0.5j, -2)
    # polynomials ignore the truncation degree
    assert parse_function('poly:1,1', degree=32).build().degree == 1
    assert parse_function('const:0.25').build() == constant(0.25)


def test_parse_koebe():
    assert parse_function('koebe').build() == koebe_series(64)
    assert parse_function('koebe@0.5').rotation == 0.5


def test_parse_dilated():
    spec = parse_function('dilated:2,0.5:schur:[0.5]')
    assert isinstance(spec, DilatedSpec)
    assert spec.build()[0] == 1.0
    assert not spec.is_polynomial
    with pytest.raises(ParameterOutOfRange):
        parse_function('dilated:2,1.5:schur:[0.5]')


@pytest.mark.parametrize('text', ['moebius:', 'blaschke:0.5', 'poly:', 'poly:1,x', 'dilated:2:koebe', 'what:1'])
def test_parse_rejects(text):
    with pytest.raises(SpecSyntaxError):
        parse_function(text)


def test_parse_file(tmp_path):
    path = tmp_path / 'f.json'
    path.write_text(json.dumps(MoebiusSpec(0.3)))
    assert parse_function('@' + str(path)).build() == moebius_series(0.3, 64)

    path.write_text(json.dumps(from_coeffs(1, 2j).to_json()))
    spec = parse_function(str(path))
    assert isinstance(spec, SeriesSpec)
    assert spec.build() == from_coeffs(1, 2j)


@pytest.mark.parametrize('spec', [
    MoebiusSpec(0.7, 16),
    BlaschkeSpec([0.2, 0.3j], 1.0, 16),
    InnerSpec([0.4], 0.0, 16),
    SchurSpec([0.1, -0.5j], 16),
    PolySpec([1, 2j]),
    ConstSpec(0.5),
    KoebeSpec(0.2, 16),
    DilatedSpec(SchurSpec([0.5]), 2.0, 0.9, 16),
])
def test_json_form_rebuilds(spec):
    again = from_json(json.loads(json.dumps(spec)))
    assert type(again) is type(spec)
    assert again.build() == spec.build()
    assert parse_function(spec.to_text(), spec.degree).build() == spec.build()


def test_with_degree():
    spec = MoebiusSpec(0.5, 16)
    assert spec.with_degree(128).build().degree == 128
    assert spec.degree == 16
    poly = PolySpec([1, 1])
    assert poly.with_degree(128) is poly


def test_from_json_rejects():
    with pytest.raises(SpecSyntaxError):
        from_json([1, 2])
    with pytest.raises(SpecSyntaxError):
        from_json({'variant': 'nope'})
    with pytest.raises(SpecSyntaxError):
        from_json({'variant': 'moebius', 'params': []})


def test_random_schwarz_spec_replays():
    spec = random_schwarz_spec(np.random.default_rng(4), SCHUR, 64)
    phi = spec.build()
    assert phi[0] == 0
    assert validate_schwarz(phi)
    assert from_json(json.loads(json.dumps(spec))).build() == phi


def test_run_config_defaults():
    config = RunConfig()
    assert config.degree == 64
    assert config.samples == 4096
    assert config.radii_for('rogosinski') == [0.1, 0.3, 0.5]
    assert RunConfig(r_extra=[0.4, 0.1]).radii_for('rogosinski') == [0.1, 0.3, 0.4, 0.5]
    assert config.reproducibility() == {'degree': 64, 'samples': 4096, 'tol': 1e-10, 'seed': 42}


def test_run_config_follows_presets(config_override):
    config_override({'series': {'degree': 32}})
    assert RunConfig().degree == 32
