"""
Command-line front end.

Exit codes: 0 every check holds, 2 some check fails, 3 some check is
inconclusive or ran out of precision budget, 64 usage or configuration
error, 65 malformed function spec or witness file.
"""
import argparse
import contextlib
import inspect
import json
import logging
import sys

from .builder import parse_function, RunConfig
from .dir import get_witness_dir, get_database_path
from .errors import BohrMajorantError, BudgetExhausted, SpecSyntaxError, ParameterOutOfRange
from .presets import setting
from .radius import Predicate, validity_radius, sharpness_search, FAMILIES
from .suite import Suite, THEOREMS, csv_writer, summary_csv, thread_cap
from .theorems import CHECKS, replay
from .util import parse_complex
from .witness import save_witness, load_witness

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64
EXIT_DATA = 65

ROLE_FLAGS = (
    ('f', ('--function', '--f')),
    ('g', ('--g',)),
    ('h', ('--h',)),
    ('phi', ('--phi',)),
    ('psi', ('--psi',)),
)

PARAM_NAMES = ('k', 'j', 'mode', 'alpha', 'b', 'rho', 'sup_bound')


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _complex_arg(text):
    try:
        return parse_complex(text)
    except ValueError:
        raise argparse.ArgumentTypeError('not a complex number: {!r}'.format(text))


def _add_config_args(p):
    p.add_argument('--degree', type=int, help='Truncation degree N (default: {}).'.format(setting('series', 'degree')))
    p.add_argument('--samples', type=int, help='Circle samples m (default: {}).'.format(setting('bohr', 'samples')))
    p.add_argument('--tol', type=float, help='Verdict tolerance (default: {:g}).'.format(setting('theorems', 'tol')))
    p.add_argument('--seed', type=int, help='Root seed (default: {}).'.format(setting('suite', 'seed')))
    p.add_argument('--format', choices=['json', 'csv'], help='Output format.')
    p.add_argument('--output', help='Output path (default: stdout).')
    p.add_argument('--witness-dir', dest='witness_dir', help='Where failure witnesses are written.')


def _add_input_args(p):
    for role, flags in ROLE_FLAGS:
        p.add_argument(*flags, dest=role, help='Function spec for {}.'.format(role))
    p.add_argument('--k', type=int, help='Section index k.')
    p.add_argument('--j', type=int, help='Power j.')
    p.add_argument('--mode', choices=['sup', 'majorant'], help='de Branges bound mode.')
    p.add_argument('--alpha', type=_complex_arg, help='Scalar for the norm axioms.')
    p.add_argument('--b', type=float, help='Bound b of g on the rho-disk.')
    p.add_argument('--rho', type=float, help='Disk radius rho in (0, 1].')
    p.add_argument('--sup-bound', type=float, dest='sup_bound', help='Bound M of |f| on the disk.')


def build_parser():
    parser = ArgumentParser(prog='bohrmajorant', description='Certified checks of Bohr-type inequalities.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG.')
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('verify', help='Run one check at one or more radii.')
    p.add_argument('theorem', nargs='?', choices=sorted(CHECKS))
    _add_input_args(p)
    p.add_argument('--r', type=float, action='append', dest='radii', help='Radius (repeatable).')
    p.add_argument('--replay', help='Witness file to re-run.')
    _add_config_args(p)

    p = sub.add_parser('suite', help='Run the seeded verification suite.')
    p.add_argument('--cases', type=int, help='Cases per theorem (default: per-theorem presets).')
    p.add_argument('--r-extra', type=float, action='append', dest='r_extra', default=[],
                   help='Extra radius for every theorem (repeatable).')
    p.add_argument('--theorem', action='append', dest='theorems', choices=THEOREMS,
                   help='Restrict to a theorem (repeatable).')
    p.add_argument('--threads', type=int, help='Worker threads (default: CPU count, capped by BOHR_MAJORANT_THREADS).')
    p.add_argument('--db', nargs='?', const=get_database_path(),
                   help='SQLite file to persist the run in (bare flag: the default data directory).')
    _add_config_args(p)

    p = sub.add_parser('radius', help='Locate the validity radius of a check.')
    p.add_argument('theorem', choices=sorted(CHECKS))
    _add_input_args(p)
    p.add_argument('--r-max', type=float, dest='r_max', help='Scan up to this radius.')
    p.add_argument('--grid', type=int, help='Scan grid size.')
    p.add_argument('--bisect-tol', type=float, dest='bisect_tol', help='Bisection width.')
    _add_config_args(p)

    p = sub.add_parser('sharpness', help='Search a one-parameter family for a failing member.')
    p.add_argument('theorem', choices=sorted(CHECKS))
    p.add_argument('--family', choices=sorted(FAMILIES), default='moebius')
    p.add_argument('--role', help='Input role the family fills (default: the first role).')
    p.add_argument('--lo', type=float, default=0.0)
    p.add_argument('--hi', type=float)
    p.add_argument('--grid', type=int, help='Parameter grid size (default: {}).'.format(setting('sharpness', 'grid')))
    p.add_argument('--r', type=float, required=True, dest='r')
    _add_input_args(p)
    _add_config_args(p)

    return parser


def run_config(args, default_format=None):
    try:
        return RunConfig(
            degree=args.degree,
            samples=args.samples,
            tol=args.tol,
            seed=args.seed,
            r_extra=getattr(args, 'r_extra', None),
            cases=getattr(args, 'cases', None),
            format=args.format or default_format,
            output=args.output,
            threads=getattr(args, 'threads', None)
        )
    except ValueError as e:
        raise UsageError(str(e))


def parse_inputs(args, theorem, optional=()):
    _, roles = CHECKS[theorem]
    inputs = {}
    for role in roles:
        text = getattr(args, role, None)
        if text is None:
            if role in optional:
                continue
            raise UsageError('{} needs --{}'.format(theorem, 'function' if role == 'f' else role))
        try:
            inputs[role] = parse_function(text, args.degree)
        except ParameterOutOfRange as e:
            raise SpecSyntaxError(str(e))
    return inputs


def check_params(args, theorem):
    check, _ = CHECKS[theorem]
    accepted = inspect.signature(check).parameters
    params = {}
    for name in PARAM_NAMES:
        value = getattr(args, name, None)
        if name not in accepted:
            continue
        if value is not None:
            params[name] = value
        elif accepted[name].default is inspect.Parameter.empty:
            raise UsageError('{} needs --{}'.format(theorem, name.replace('_', '-')))
    if theorem == 'debranges' and 'mode' not in params:
        params['mode'] = 'majorant'
    return params


def default_radii(theorem):
    check, _ = CHECKS[theorem]
    r = inspect.signature(check).parameters.get('r')
    if r is None or r.default is inspect.Parameter.empty:
        raise UsageError('{} needs --r'.format(theorem))
    return [r.default]


@contextlib.contextmanager
def open_output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, 'w', newline='') as f:
            yield f


def exit_code(verdicts):
    verdicts = list(verdicts)
    if 'fails' in verdicts:
        return EXIT_FAILS
    if 'inconclusive' in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _save_failure(witness, config, args):
    witness = dict(witness, config=config.reproducibility())
    return save_witness(witness, args.witness_dir or get_witness_dir())


def cmd_verify(args):
    config = run_config(args)
    if args.replay:
        witness = load_witness(args.replay)
        reports = [replay(witness)]
    else:
        if args.theorem is None:
            raise UsageError('verify needs a theorem or --replay')
        predicate = Predicate(args.theorem, parse_inputs(args, args.theorem),
                              tol=config.tol, **check_params(args, args.theorem))
        radii = args.radii or default_radii(args.theorem)
        reports = [predicate(r, samples=config.samples) for r in radii]

    with open_output(config.output) as f:
        if config.format == 'csv':
            writer = csv_writer(f)
            writer.writerow(['theorem', 'r', 'verdict', 'margin'])
        for report in reports:
            report['witness']['config'] = config.reproducibility()
            if config.format == 'csv':
                writer.writerow([report.theorem, repr(report.witness['r']), report['verdict'], repr(report.margin)])
            else:
                f.write(json.dumps(report, sort_keys=True) + '\n')

    for report in reports:
        if report.fails and not args.replay:
            _save_failure(report.witness, config, args)

    return exit_code(report['verdict'] for report in reports)


def cmd_suite(args):
    config = run_config(args, setting('output', 'suite_format'))
    if args.threads is None:
        config['threads'] = thread_cap()

    with Suite(config, args.theorems, database_path=args.db) as suite:
        rows = suite.run()
        failures = suite.failures()

    with open_output(config.output) as f:
        if config.format == 'json':
            f.write(json.dumps({'version': setting('output', 'json_version'), 'rows': rows}, sort_keys=True) + '\n')
        else:
            f.write(summary_csv(rows))

    if args.witness_dir:
        for record in failures:
            if record['witness'] is not None:
                save_witness(record['witness'], args.witness_dir)

    verdicts = []
    for row in rows:
        if row['fails']:
            verdicts.append('fails')
        if row['inconclusive']:
            verdicts.append('inconclusive')
    return exit_code(verdicts)


def cmd_radius(args):
    config = run_config(args)
    predicate = Predicate(args.theorem, parse_inputs(args, args.theorem), **check_params(args, args.theorem))
    result = validity_radius(predicate, args.r_max, args.grid, args.bisect_tol)

    with open_output(config.output) as f:
        if config.format == 'csv':
            writer = csv_writer(f)
            writer.writerow(['theorem', 'radius_low', 'radius_high', 'never_fails', 'evaluations'])
            writer.writerow([result['theorem'], repr(result.radius_low), repr(result.radius_high),
                             result.never_fails, result.evaluations])
        else:
            f.write(json.dumps(result, sort_keys=True) + '\n')

    if result['first_failure_witness'] is not None:
        _save_failure(result['first_failure_witness'], config, args)
    if result['boundary'] == 'inconclusive':
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_sharpness(args):
    config = run_config(args)
    family = FAMILIES[args.family](args.lo, args.hi, args.degree)
    role = args.role or CHECKS[args.theorem][1][0]
    inputs = parse_inputs(args, args.theorem, optional=(role,))
    inputs.pop(role, None)

    found = sharpness_search(args.theorem, family, args.r, args.grid, role, inputs,
                             **check_params(args, args.theorem))

    with open_output(config.output) as f:
        if config.format == 'csv':
            writer = csv_writer(f)
            writer.writerow(['theorem', 'family', 'r', 'parameter', 'margin'])
            if found is not None:
                writer.writerow([found['theorem'], found['family'], repr(found['r']),
                                 repr(found.parameter), repr(found.margin)])
        else:
            f.write(json.dumps(found, sort_keys=True) + '\n')

    if found is None:
        return EXIT_OK
    _save_failure(found['witness'], config, args)
    return EXIT_FAILS


COMMANDS = {
    'verify': cmd_verify,
    'suite': cmd_suite,
    'radius': cmd_radius,
    'sharpness': cmd_sharpness,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print('bohrmajorant: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)

    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print('bohrmajorant: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE
    except SpecSyntaxError as e:
        print('bohrmajorant: {}'.format(e), file=sys.stderr)
        return EXIT_DATA
    except BudgetExhausted as e:
        print('bohrmajorant: {}'.format(e), file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except BohrMajorantError as e:
        print('bohrmajorant: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE
