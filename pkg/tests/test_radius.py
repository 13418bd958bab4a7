import pytest

from bohrmajorant.bohr import CertifiedValue
from bohrmajorant.builder.specs import MoebiusSpec, ConstSpec, PolySpec
from bohrmajorant.errors import ParameterOutOfRange, BudgetExhausted
from bohrmajorant.radius import Predicate, RadiusResult, validity_radius, MoebiusFamily, BlaschkeFamily, \
    closed_form_bohr_radius, closed_form_rogosinski_radius, sharpness_search
from bohrmajorant.theorems import InequalityReport, replay


class ScriptedPredicate(Predicate):
    """Inconclusive beyond `cutoff`, holding below it."""
    def __init__(self, cutoff):
        super(ScriptedPredicate, self).__init__('bohr', {'f': ConstSpec(0.5)})
        self.cutoff = cutoff

    def evaluate(self, r, **overrides):
        verdict = 'holds' if r <= self.cutoff else 'inconclusive'
        value = CertifiedValue(0.0, 1.0)
        return InequalityReport('bohr', verdict, value, value, 0.0)


@pytest.mark.parametrize('a', [0.5, 0.9, 0.99, 0.999])
def test_bohr_radius_of_moebius(a):
    result = validity_radius(Predicate('bohr', {'f': MoebiusSpec(a)}))
    expected = closed_form_bohr_radius(a)
    assert not result.never_fails
    assert result.width <= 1e-6
    assert result.radius_low == pytest.approx(expected, abs=1e-6)
    assert result.radius_high == pytest.approx(expected, abs=1e-6)


def test_bohr_radius_decreases_towards_one_third():
    radii = [validity_radius(Predicate('bohr', {'f': MoebiusSpec(a)})).radius_high for a in (0.5, 0.9, 0.99)]
    assert radii == sorted(radii, reverse=True)
    assert radii[-1] > 1 / 3


@pytest.mark.parametrize('a', [0.5, 0.9, 0.99])
def test_rogosinski_radius_of_moebius(a):
    result = validity_radius(Predicate('rogosinski', {'f': MoebiusSpec(a)}, k=1))
    assert result.radius_high == pytest.approx(closed_form_rogosinski_radius(a), abs=1e-6)


def test_first_failure_witness_replays():
    result = validity_radius(Predicate('bohr', {'f': MoebiusSpec(0.9)}))
    witness = result['first_failure_witness']
    assert witness['r'] == result.radius_high
    assert witness['specs']['f']['variant'] == 'moebius'
    assert replay(witness).fails


def test_constant_never_fails():
    result = validity_radius(Predicate('bohr', {'f': ConstSpec(0.5)}))
    assert result.never_fails
    assert result['boundary'] == 'r_max'
    assert result.radius_high == 1.0
    assert result.radius_low == pytest.approx(0.95)


def test_polynomial_bohr_is_exact():
    predicate = Predicate('bohr', {'f': PolySpec([0.5, 0.5])})
    assert predicate.params['exact']
    # 1/2 + r/2 <= 1 everywhere in the disk
    assert validity_radius(predicate).never_fails


def test_grid_refinement_is_stable():
    predicate = Predicate('bohr', {'f': MoebiusSpec(0.5)})
    coarse = validity_radius(predicate, grid=256)
    fine = validity_radius(predicate, grid=512)
    assert coarse.radius_high == pytest.approx(fine.radius_high, abs=1e-6)


def test_threaded_scan_matches_serial():
    predicate = Predicate('bohr', {'f': MoebiusSpec(0.7)})
    serial = validity_radius(predicate, grid=64)
    threaded = validity_radius(predicate, grid=64, threads=4)
    assert serial.radius_low == threaded.radius_low
    assert serial.radius_high == threaded.radius_high


def test_rejects_parameters():
    predicate = Predicate('bohr', {'f': MoebiusSpec(0.5)})
    with pytest.raises(ParameterOutOfRange):
        validity_radius(predicate, grid=8)
    with pytest.raises(ParameterOutOfRange):
        validity_radius(predicate, r_max=1.0)
    with pytest.raises(ParameterOutOfRange):
        Predicate('subordination', {'h': PolySpec([1, 1])})
    with pytest.raises(ParameterOutOfRange):
        Predicate('nope', {})


def test_inconclusive_grid_point_ends_scan():
    result = validity_radius(ScriptedPredicate(0.5), r_max=0.8, grid=16)
    assert result['boundary'] == 'inconclusive'
    assert result.radius_low == pytest.approx(0.5)
    assert result.radius_high == pytest.approx(0.55)
    assert not result.never_fails


def test_inconclusive_midpoint_exhausts_budget():
    class Flaky(ScriptedPredicate):
        def evaluate(self, r, **overrides):
            if r == pytest.approx(0.8):
                value = CertifiedValue.point(2.0)
                return InequalityReport('bohr', 'fails', value, CertifiedValue.point(1.0), 1.0)
            return super(Flaky, self).evaluate(r, **overrides)

    with pytest.raises(BudgetExhausted):
        validity_radius(Flaky(0.75), r_max=0.8, grid=16)


def test_radius_result_validates_bracket():
    with pytest.raises(ValueError):
        RadiusResult('bohr', 0.5, 0.4, 1)
    result = RadiusResult('bohr', 0.3, 0.4, 1)
    assert result.contains(0.35)
    assert not result.contains(0.45)


def test_predicate_climbs_degree():
    predicate = Predicate('bohr', {'f': MoebiusSpec(0.5, 16)})
    assert predicate.series(128)['f'].degree == 128
    assert predicate.series()['f'].degree == 16


def test_sharpness_bohr_beyond_radius():
    witness = sharpness_search('bohr', MoebiusFamily(), 0.35)
    assert witness is not None
    assert witness.parameter == pytest.approx(0.95, abs=1e-6)
    assert witness.margin > 1e-3
    assert witness['family'] == 'moebius'
    assert replay(witness['witness']).fails


def test_sharpness_bohr_at_radius():
    assert sharpness_search('bohr', MoebiusFamily(), 1 / 3) is None


def test_sharpness_rogosinski():
    witness = sharpness_search('rogosinski', MoebiusFamily(), 0.55, param_grid=11, k=1)
    assert witness.parameter == pytest.approx(0.9, abs=1e-6)
    assert witness['lhs']['lower'] == pytest.approx(1.0045, abs=1e-4)


def test_sharpness_schwarz_majorant():
    # M_r(z m_a) > r exactly when a > (1 - r) / (2 r), which is 0.75 at r = 0.4
    witness = sharpness_search('schwarz-majorant', BlaschkeFamily(), 0.4)
    assert witness.parameter > 0.75
    assert witness['family'] == 'blaschke'


def test_family_grid():
    family = MoebiusFamily(0.0, 0.5)
    assert family.grid(3) == [0.0, 0.25, 0.5]
    assert family.grid(1) == [0.0]
    with pytest.raises(ParameterOutOfRange):
        MoebiusFamily(0.9, 0.1)
