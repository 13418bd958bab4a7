"""
The seeded verification suite behind ``bohrmajorant suite``.

Every case draws its inputs from ``default_rng([seed, theorem index, case
index])``, so a case can be regenerated on its own and the outcome does not
depend on the number of worker threads. Per-case verdicts go into an
in-memory TinyDB ledger that the summary rows are counted from.
"""
import csv
import io
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import psutil
import tinydb as tdb
from tinydb.storages import MemoryStorage

from . import report_db
from .builder.config import RunConfig
from .builder.specs import PolySpec, KoebeSpec, DilatedSpec, random_schwarz_spec, random_bounded_spec
from .errors import BudgetExhausted
from .presets import get_section
from .radius import Predicate
from .schwarz import BLASCHKE, SCHUR

logger = logging.getLogger(__name__)

THEOREMS = (
    'bohr',
    'rogosinski',
    'norm-axioms',
    'schwarz-majorant',
    'subordination',
    'general-subordination',
    'quasi-subordination',
    'von-neumann',
    'section-powers',
    'section-sup',
    'section-majorant',
    'section-chain',
    'debranges-sup',
    'debranges-majorant',
)

SUMMARY_COLUMNS = ('theorem', 'r', 'holds', 'fails', 'inconclusive')


def thread_cap():
    """psutil's CPU count, capped by BOHR_MAJORANT_THREADS when set."""
    cap = psutil.cpu_count() or 1
    env = os.environ.get('BOHR_MAJORANT_THREADS')
    if env:
        cap = min(cap, max(1, int(env)))
    return cap


def case_rng(seed, theorem, case_index):
    return np.random.default_rng([seed, THEOREMS.index(theorem), case_index])


class CaseFactory:
    """Draws the inputs of one suite case from its generator."""
    def __init__(self, rng, degree):
        self.rng = rng
        self.degree = degree
        self.config = get_section('suite')

    def family(self):
        return (BLASCHKE, SCHUR)[int(self.rng.integers(2))]

    def polynomial(self):
        box = self.config['coefficient_box']
        d = int(self.rng.integers(0, self.config['max_poly_degree'] + 1))
        re = self.rng.uniform(-box, box, d + 1)
        im = self.rng.uniform(-box, box, d + 1)
        return PolySpec(re + 1j * im)

    def schwarz(self):
        return random_schwarz_spec(self.rng, self.family(), self.degree)

    def bounded(self):
        return random_bounded_spec(self.rng, self.family(), self.degree)

    def complex_scalar(self):
        box = self.config['coefficient_box']
        return complex(self.rng.uniform(-box, box), self.rng.uniform(-box, box))

    def pick(self, key):
        values = self.config[key]
        return values[int(self.rng.integers(len(values)))]

    def section(self):
        return int(self.rng.integers(0, self.config['max_section'] + 1))

    def draw(self, theorem):
        """Returns (inputs, params, radii); radii is None for the configured grid."""
        if theorem == 'bohr':
            return {'f': self.bounded()}, {'sup_bound': 1.0}, None
        if theorem == 'rogosinski':
            return {'f': self.bounded()}, {'k': self.pick('rogosinski_sections')}, None
        if theorem == 'norm-axioms':
            return {'f': self.polynomial(), 'g': self.polynomial()}, {'alpha': self.complex_scalar()}, None
        if theorem == 'schwarz-majorant':
            return {'phi': self.schwarz()}, {}, None
        if theorem in ('subordination', 'von-neumann'):
            return {'h': self.polynomial(), 'phi': self.schwarz()}, {}, None
        if theorem == 'general-subordination':
            b = self.pick('b')
            rho = self.pick('rho')
            g = DilatedSpec(self.bounded(), b, rho)
            return {'h': self.polynomial(), 'g': g, 'phi': self.schwarz()}, {'b': b, 'rho': rho}, [rho / 3]
        if theorem == 'quasi-subordination':
            return {'h': self.polynomial(), 'psi': self.bounded(), 'phi': self.schwarz()}, {}, None
        if theorem == 'section-powers':
            j = int(self.rng.integers(1, self.config['max_power'] + 1))
            return {'phi': self.schwarz()}, {'j': j, 'k': self.section()}, None
        if theorem in ('section-sup', 'section-majorant', 'section-chain'):
            return {'h': self.polynomial(), 'phi': self.schwarz()}, {'k': self.section()}, None
        if theorem in ('debranges-sup', 'debranges-majorant'):
            h = KoebeSpec(2 * math.pi * self.rng.random(), self.degree)
            return {'h': h, 'phi': self.schwarz()}, {'k': self.pick('debranges_sections')}, None

        raise KeyError(theorem)


class Suite:
    def __init__(self, config: RunConfig=None, theorems=None, database_path: str=None):
        if config is None:
            config = RunConfig()
        self.config = config
        self.theorems = list(theorems or THEOREMS)
        for theorem in self.theorems:
            if theorem not in THEOREMS:
                raise KeyError('Unknown suite theorem: {}'.format(theorem))

        self.tdb = tdb.TinyDB(storage=MemoryStorage)
        self.database_path = database_path
        if database_path is not None:
            report_db.connect(database_path)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def close(self):
        if self.database_path is not None:
            report_db.database.close()

    def radii_for(self, theorem, radii=None):
        if radii is None:
            return self.config.radii_for(theorem)
        return sorted(set(list(radii) + list(self.config.r_extra)))

    def run_case(self, theorem, case_index):
        seed = self.config.seed
        records = []
        try:
            factory = CaseFactory(case_rng(seed, theorem, case_index), self.config.degree)
            inputs, params, radii = factory.draw(theorem)
        except BudgetExhausted as e:
            logger.warning('%s case %d: %s', theorem, case_index, e)
            for r in self.radii_for(theorem):
                records.append(dict(theorem=theorem, r=r, case=case_index, verdict='inconclusive',
                                    margin=0.0, witness=None))
            return records

        predicate = Predicate(theorem, inputs, tol=self.config.tol, **params)
        for r in self.radii_for(theorem, radii):
            try:
                report = predicate(r, samples=self.config.samples)
            except BudgetExhausted as e:
                logger.warning('%s case %d at r=%r: %s', theorem, case_index, r, e)
                records.append(dict(theorem=theorem, r=r, case=case_index, verdict='inconclusive',
                                    margin=0.0, witness=None))
                continue

            witness = None
            if not report.holds:
                witness = dict(report.witness, config=self.config.reproducibility(), case=case_index)
            records.append(dict(theorem=theorem, r=r, case=case_index, verdict=report['verdict'],
                                margin=report.margin, witness=witness))

        return records

    def run_theorem(self, theorem, executor=None):
        cases = range(self.config.cases_for(theorem))
        logger.info('Running %d %s cases', len(cases), theorem)

        def run(case_index):
            return self.run_case(theorem, case_index)

        results = executor.map(run, cases) if executor is not None else map(run, cases)
        records = [record for case_records in results for record in case_records]
        records.sort(key=lambda d: (d['r'], d['case']))
        self.tdb.insert_multiple(records)
        return records

    def run(self):
        threads = self.config.threads
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                for theorem in self.theorems:
                    self.run_theorem(theorem, executor)
        else:
            for theorem in self.theorems:
                self.run_theorem(theorem)

        rows = self.summary()
        if self.database_path is not None:
            self.persist(rows)
        return rows

    def summary(self):
        q = tdb.Query()
        rows = []
        for theorem in sorted(set(d['theorem'] for d in self.tdb)):
            for r in sorted(set(d['r'] for d in self.tdb.search(q.theorem == theorem))):
                at_r = (q.theorem == theorem) & (q.r == r)
                rows.append(dict(
                    theorem=theorem,
                    r=r,
                    holds=self.tdb.count(at_r & (q.verdict == 'holds')),
                    fails=self.tdb.count(at_r & (q.verdict == 'fails')),
                    inconclusive=self.tdb.count(at_r & (q.verdict == 'inconclusive'))
                ))
        return rows

    def failures(self):
        """Non-holding records in canonical order."""
        q = tdb.Query()
        records = self.tdb.search(q.verdict != 'holds')
        return sorted(records, key=lambda d: (d['theorem'], d['r'], d['case']))

    def persist(self, rows):
        with report_db.database.atomic():
            run = report_db.Run.create(seed=self.config.seed, config=self.config.reproducibility(), summary=rows)
            for d in sorted(self.tdb.all(), key=lambda d: (d['theorem'], d['r'], d['case'])):
                report_db.ReportRecord.create(
                    run=run,
                    theorem=d['theorem'],
                    r=d['r'],
                    case_index=d['case'],
                    verdict=d['verdict'],
                    margin=d['margin'],
                    witness=d['witness']
                )
        logger.info('Suite run %d stored in %s', run.id, self.database_path)
        return run


def csv_writer(f):
    """csv writer on `f`, after a comment line carrying the CSV schema version."""
    f.write('# csv_version {}\n'.format(get_section('output')['csv_version']))
    return csv.writer(f, lineterminator='\n')


def summary_csv(rows) -> str:
    buffer = io.StringIO()
    writer = csv_writer(buffer)
    writer.writerow(SUMMARY_COLUMNS)
    for row in rows:
        writer.writerow([row['theorem'], repr(float(row['r'])), row['holds'], row['fails'], row['inconclusive']])
    return buffer.getvalue()
