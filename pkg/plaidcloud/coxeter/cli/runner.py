#!/usr/bin/env python
# coding=utf-8
"""
Entry point for the ``coxeter`` console script.

Exit codes: 0 when every requested check passes, 1 when a check fails or a domain error is raised, 2 for usage
errors. The JSON report is deterministic for a given JobSpec and seed.
"""

import argparse
import logging
import sys
import time

from plaidcloud.coxeter import file_helpers
from plaidcloud.coxeter.cli.common import (
    CHECK_FAILED, SCHEMA, USAGE_ERROR, JobError, command_names, get_callable_object, json_error,
)
from plaidcloud.coxeter.cli.jobspec import JobSpec
from plaidcloud.coxeter.config import load_workspace_config
from plaidcloud.coxeter.logger import Logger
from plaidcloud.coxeter.orjson import dumps

__author__ = 'Paul Morel'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel', 'Pat Buxton']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

ALIASES = {'cache': 'cache-admin'}
CACHE_ACTIONS = ('status', 'clear', 'warm')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--type', dest='series', help='Series letter, e.g. A, B, D')
    common.add_argument('--rank', type=int, help='Rank of the irreducible type')
    common.add_argument('--eps', default='id', help='Automorphism: id, flip, triality or images such as "s3 s2 s1"')
    common.add_argument('--J', dest='J', help='Subset of simple reflections, e.g. "s1 s3"')
    common.add_argument('--K', dest='K', help='Second subset; affine nodes for quasirat, e.g. "w s2"')
    common.add_argument('--K2', dest='K2', help='Third subset')
    common.add_argument('--H', dest='H', help='Innermost subset for signsum')
    common.add_argument('--w', dest='w', help='Element as a word, e.g. "s2 s1"')
    common.add_argument('--u', dest='u', help='Element as a word')
    common.add_argument('--n', type=int, help='n for sp-model, or the order of c for quasirat')
    common.add_argument('--k', type=int, help='k for sp-model')
    common.add_argument('--special', help='Reflection class for the affine datum: long, short or an index')
    common.add_argument('--level', default='root', choices=('root', 'reflection'), help='Omega level')
    common.add_argument('--params', help='Hecke parameter exponents 2m per simple reflection, e.g. "2 2 4"')
    common.add_argument('--count', type=int, help='Random triples for randomized sweeps')
    common.add_argument('--seed', type=int, default=0, help='Seed for randomized sweeps')
    common.add_argument('--output', help='Write the JSON report to this path')
    common.add_argument('--json', action='store_true', help='Print the JSON report instead of the table')
    common.add_argument('--spec', dest='spec_file', help='Read the JobSpec from a JSON file; other flags are ignored')
    common.add_argument('-v', '--verbose', dest='verbosity', action='count', default=0)

    parser = argparse.ArgumentParser(prog='coxeter', description='Exact Coxeter group toolkit')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name in command_names():
        if name == 'cache-admin':
            continue
        subparsers.add_parser(name, parents=[common], help=get_callable_object(name).description)
    cache_parser = subparsers.add_parser('cache', parents=[common], help='Character table cache')
    cache_parser.add_argument('action', choices=CACHE_ACTIONS)
    cache_parser.add_argument('groups', nargs='*', help='Groups to warm, e.g. B2 D4')
    return parser


def spec_from_args(args):
    if args.spec_file:
        return JobSpec.from_file(args.spec_file)
    return JobSpec(
        command=args.command,
        series=args.series,
        rank=args.rank,
        eps=args.eps,
        J=args.J,
        K=args.K,
        K2=args.K2,
        H=args.H,
        w=args.w,
        u=args.u,
        n=args.n,
        k=args.k,
        special=args.special,
        level=args.level,
        groups=list(getattr(args, 'groups', None) or []),
        action=getattr(args, 'action', None),
        count=args.count,
        params=args.params,
        seed=args.seed,
        output=args.output,
        json=args.json,
        verbosity=args.verbosity,
    )


def execute_job(spec, log=None):
    """Run one JobSpec.

    Returns:
        dict: ``{'id', 'ok', 'result'}`` or ``{'id', 'ok', 'error'}``; never raises
    """
    log = log or logger
    name = ALIASES.get(spec.command, spec.command)
    try:
        command = get_callable_object(name)
    except JobError as exc:
        return {'id': spec.id, 'ok': False, 'error': exc.json_error()}
    log.info('Start "%s"', spec.command)
    started = time.perf_counter()
    try:
        result = command(spec, log)
    except JobError as exc:
        return {'id': spec.id, 'ok': False, 'error': exc.json_error()}
    except Exception as exc:
        log.exception('Unhandled exception in command %s', spec.command)
        message = command.default_error or 'Unexpected error'
        return {
            'id': spec.id, 'ok': False,
            'error': json_error(f'{message} - {exc}', data=spec.group_spec(), code=CHECK_FAILED),
        }
    finally:
        log.debug('Finish "%s" in %.2fs', spec.command, time.perf_counter() - started)
    return {'id': spec.id, 'ok': result['ok'], 'result': result}


def build_report(spec, outcome, records=None):
    report = {
        'schema': SCHEMA,
        'command': spec.command,
        'job': spec.to_dict(),
        'ok': outcome['ok'],
    }
    if 'result' in outcome:
        report.update({key: value for key, value in outcome['result'].items() if key != 'ok'})
        failed = [s for s in outcome['result']['suites'] if not s['ok']]
        if failed:
            report['counterexample'] = dict(failed[0]['counterexample'] or {}, suite=failed[0]['name'])
    else:
        report['error'] = outcome['error']
    if records is not None:
        report['log'] = records
    return report


def render_table(report):
    """Human readable rendering: aligned columns, then the overall status."""
    lines = []
    table = report.get('table') or {'header': [], 'rows': []}
    header, rows = table['header'], table['rows']
    if header:
        widths = [max(len(str(cell)) for cell in column) for column in zip(header, *rows)]
        lines.append('  '.join(str(cell).ljust(width) for cell, width in zip(header, widths)).rstrip())
        lines.append('  '.join('-' * width for width in widths))
        for row in rows:
            lines.append('  '.join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip())
    if 'error' in report:
        lines.append(f'error: {report["error"]["message"]}')
    elif 'counterexample' in report:
        lines.append(f'FAILED: {report["counterexample"]["suite"]}')
    lines.append('ok' if report['ok'] else 'not ok')
    return '\n'.join(lines) + '\n'


def exit_code(outcome):
    if outcome['ok']:
        return 0
    if 'error' in outcome:
        return outcome['error']['code']
    return CHECK_FAILED


def run(argv=None, stdout=None):
    """Parse argv, run the job, print and write the report.

    Returns:
        int: The exit status
    """
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    load_workspace_config()
    try:
        spec = spec_from_args(args)
    except JobError as exc:
        stdout.write(f'error: {exc.message}\n')
        return exc.code
    log = Logger('coxeter', verbosity=spec.verbosity, stream=sys.stderr)
    outcome = execute_job(spec, log)
    report = build_report(spec, outcome, records=[r for r in log.records if r['level'] != 'debug'])
    payload = dumps(report)
    if spec.output:
        try:
            file_helpers.write_bytes_atomic(spec.output, payload)
        except OSError as exc:
            stdout.write(f'error: cannot write {spec.output}: {exc}\n')
            return CHECK_FAILED
    if spec.json:
        stdout.write(payload.decode('utf-8') + '\n')
    else:
        stdout.write(render_table(report))
    return exit_code(outcome)


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
