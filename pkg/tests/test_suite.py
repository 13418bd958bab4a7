import pytest

from bohrmajorant import report_db
from bohrmajorant.builder.config import RunConfig
from bohrmajorant.suite import Suite, CaseFactory, THEOREMS, SUMMARY_COLUMNS, case_rng, summary_csv, thread_cap


def run_suite(theorems=None, **kwargs):
    with Suite(RunConfig(**kwargs), theorems) as suite:
        return suite.run()


def test_small_suite_has_no_failures():
    rows = run_suite(cases=3)
    assert {row['theorem'] for row in rows} == set(THEOREMS)
    for row in rows:
        assert row['fails'] == 0, row
        if row['theorem'] != 'general-subordination':
            assert row['holds'] + row['inconclusive'] == 3
    # general subordination runs each case at its own rho / 3
    assert sum(row['holds'] + row['inconclusive'] for row in rows if row['theorem'] == 'general-subordination') == 3


def test_summary_rows_follow_configured_radii():
    rows = run_suite(['rogosinski'], cases=2)
    assert [row['r'] for row in rows] == [0.1, 0.3, 0.5]
    assert list(rows[0]) == list(SUMMARY_COLUMNS)


def test_extra_radius_is_appended():
    rows = run_suite(['bohr'], cases=2, r_extra=[0.4])
    assert [row['r'] for row in rows] == [1 / 3, 0.4]


def test_general_subordination_runs_at_dilated_radius():
    with Suite(RunConfig(cases=6), ['general-subordination']) as suite:
        suite.run()
        radii = {d['r'] for d in suite.tdb.all()}
    assert radii <= {rho / 3 for rho in (0.6, 0.9, 1.0)}


def test_csv_is_deterministic():
    first = summary_csv(run_suite(['bohr', 'subordination'], cases=4, seed=7))
    second = summary_csv(run_suite(['bohr', 'subordination'], cases=4, seed=7))
    assert first == second
    assert first.splitlines()[:3] == ['# csv_version 1', 'theorem,r,holds,fails,inconclusive', 'bohr,0.3333333333333333,4,0,0']


def test_threads_do_not_change_outcome():
    serial = run_suite(['quasi-subordination', 'section-chain'], cases=4)
    threaded = run_suite(['quasi-subordination', 'section-chain'], cases=4, threads=3)
    assert serial == threaded


def test_case_is_reproducible_on_its_own():
    draws = [CaseFactory(case_rng(42, 'subordination', 5), 64).draw('subordination') for _ in range(2)]
    (inputs_a, params_a, _), (inputs_b, params_b, _) = draws
    assert inputs_a['h'].build() == inputs_b['h'].build()
    assert inputs_a['phi'].build() == inputs_b['phi'].build()
    assert params_a == params_b

    other = CaseFactory(case_rng(42, 'subordination', 6), 64).draw('subordination')[0]
    assert other['phi'].build() != inputs_a['phi'].build()


def test_failing_records_keep_a_witness():
    with Suite(RunConfig(cases=20, radii=[0.6]), ['bohr']) as suite:
        suite.run()
        failures = suite.failures()
    for record in failures:
        assert record['witness']['config']['seed'] == 42
        assert record['witness']['case'] == record['case']


def test_persist(tmp_path):
    path = str(tmp_path / 'runs.db')
    with Suite(RunConfig(cases=2), ['bohr', 'schwarz-majorant'], database_path=path) as suite:
        rows = suite.run()
        run = report_db.Run.get()
        assert run.summary == rows
        assert run.seed == 42
        assert run.mod >= run.created
        assert run.reports.count() == 4
        assert {record.verdict for record in run.reports} == {'holds'}


def test_unknown_theorem():
    with pytest.raises(KeyError):
        Suite(RunConfig(), ['nope'])


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(degree=0)
    with pytest.raises(ValueError):
        RunConfig(format='xml')
    with pytest.raises(ValueError):
        RunConfig(r_extra=[1.0])
    assert RunConfig(cases=5).cases_for('bohr') == 5
    assert RunConfig().cases_for('bohr') == 1000


def test_thread_cap(monkeypatch):
    monkeypatch.setenv('BOHR_MAJORANT_THREADS', '1')
    assert thread_cap() == 1
    monkeypatch.delenv('BOHR_MAJORANT_THREADS')
    assert thread_cap() >= 1


def test_suite_at_scale():
    rows = run_suite(cases=50, threads=4)
    assert sum(row['fails'] for row in rows) == 0
    total = sum(row['holds'] + row['fails'] + row['inconclusive'] for row in rows)
    assert sum(row['inconclusive'] for row in rows) <= 0.01 * total
