#!/usr/bin/env python
# coding=utf-8

import io
import os
import shutil
import tempfile
import unittest
from unittest import mock

import pytest

from plaidcloud.coxeter import config
from plaidcloud.coxeter.cli.common import CHECK_FAILED, USAGE_ERROR, JobError, Suite, command_names, get_callable_object
from plaidcloud.coxeter.cli.jobspec import JobSpec
from plaidcloud.coxeter.cli.runner import build_report, execute_job, render_table, run
from plaidcloud.coxeter.orjson import loads

__author__ = "Pat Buxton"
__copyright__ = "© Copyright 2024, Tartan Solutions, Inc"
__credits__ = ["Pat Buxton", "Paul Morel"]
__license__ = "Apache 2.0"
__maintainer__ = "Pat Buxton"
__email__ = "pat.buxton@tartansolutions.com"


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.env = mock.patch.dict(os.environ, {config.CACHE_ENV: os.path.join(self.tmp, 'cache')})
        self.env.start()

    def run_cli(self, *argv):
        out = io.StringIO()
        code = run(list(argv), stdout=out)
        return code, out.getvalue()

    def tearDown(self):
        self.env.stop()
        shutil.rmtree(self.tmp)


class TestRunner(CliTestCase):
    """These tests validate the command line entry point and its exit codes"""

    def test_jtower_table(self):
        code, output = self.run_cli('jtower', '--type', 'A', '--rank', '2', '--J', 's1', '--w', 's2')
        assert code == 0
        lines = output.splitlines()
        assert lines[0].split() == ['step', 'J', 'w0']
        assert lines[-1] == 'ok'

    def test_jtower_json(self):
        code, output = self.run_cli('jtower', '--type', 'A', '--rank', '2', '--J', 's1', '--w', 's2', '--json')
        assert code == 0
        report = loads(output)
        assert report['schema'] == 1
        assert report['command'] == 'jtower'
        assert report['ok'] is True
        assert report['data']['j_infinity'] == []
        assert report['job']['J'] == 's1'
        assert [s['name'] for s in report['suites']] == ['jtower']

    def test_output_file(self):
        path = os.path.join(self.tmp, 'report.json')
        code, _ = self.run_cli('coset-reps', '--type', 'A', '--rank', '2', '--J', 's1', '--output', path)
        assert code == 0
        with open(path, 'rb') as fp:
            report = loads(fp.read())
        assert report['data']['reps'] == ['e', 's2', 's2 s1']

    def test_usage_errors(self):
        assert self.run_cli('no-such-command')[0] == USAGE_ERROR
        assert self.run_cli('jtower', '--type', 'A', '--rank', '2', '--J', 's1')[0] == USAGE_ERROR
        code, output = self.run_cli('jtower', '--type', 'Z', '--rank', '2', '--J', 's1', '--w', 's2')
        assert code == USAGE_ERROR
        assert 'error:' in output

    def test_spec_file(self):
        path = os.path.join(self.tmp, 'job.json')
        with open(path, 'w') as fp:
            fp.write('{"command": "jtower", "series": "A", "rank": 2, "J": "s1", "w": "s2"}')
        assert self.run_cli('jtower', '--spec', path)[0] == 0
        with open(path, 'w') as fp:
            fp.write('{"command": "jtower", "colour": "blue"}')
        code, output = self.run_cli('jtower', '--spec', path)
        assert code == USAGE_ERROR
        assert 'colour' in output

    def test_verify_all(self):
        code, output = self.run_cli('verify-all', '--type', 'A', '--rank', '2', '--json')
        assert code == 0
        report = loads(output)
        assert report['ok'] is True
        assert report['data']['automorphisms'] == ['id', 's2,s1']
        names = {s['name'] for s in report['suites']}
        expected = {'duality.involution', 'mackey.formula', 'signsum', 'jtower', 'series.sign', 'hecke.associativity'}
        assert expected <= names
        assert all(s['ok'] for s in report['suites'])

    def test_cache_status(self):
        code, output = self.run_cli('cache', 'status', '--json')
        assert code == 0
        report = loads(output)
        assert report['job']['action'] == 'status'
        assert report['data']['entries'] == []

    def test_cache_warm_bad_name(self):
        assert self.run_cli('cache', 'warm', 'Bx')[0] == USAGE_ERROR


class TestJobs(CliTestCase):
    """These tests validate JobSpec parsing and job execution"""

    def test_from_dict(self):
        spec = JobSpec.from_dict({'command': 'duality', 'series': 'A', 'rank': 2})
        assert spec.eps == 'id'
        assert JobSpec.from_dict(spec.to_dict()) == spec
        with pytest.raises(JobError) as exc_info:
            JobSpec.from_dict({'command': 'duality', 'typ': 'A'})
        assert exc_info.value.code == USAGE_ERROR
        with pytest.raises(JobError):
            JobSpec.from_dict({'series': 'A'})
        with pytest.raises(JobError):
            JobSpec.from_dict(['duality'])

    def test_parsed_views(self):
        spec = JobSpec(command='signsum', series='A', rank=3, J='s1 s3', eps='flip+id')
        datum = spec.datum()
        assert spec.subset('J') == frozenset({0, 2})
        assert spec.subset('K', frozenset()) == frozenset()
        assert len(spec.automorphisms(datum)) == 2
        with pytest.raises(JobError):
            spec.require('H', 'K')
        with pytest.raises(JobError):
            JobSpec(command='signsum').datum()

    def test_unknown_command(self):
        outcome = execute_job(JobSpec(command='nothing'))
        assert not outcome['ok']
        assert outcome['error']['code'] == USAGE_ERROR

    def test_unexpected_exception(self):
        spec = JobSpec(command='jtower', series='A', rank=2, J='s1', w='s2')
        with mock.patch('plaidcloud.coxeter.cli.commands.j_infinity', side_effect=RuntimeError('boom')):
            outcome = execute_job(spec)
        assert not outcome['ok']
        assert outcome['error']['code'] == CHECK_FAILED
        assert outcome['error']['message'] == 'Failed to compute the tower - boom'
        assert outcome['error']['data'] == {'type': 'A', 'rank': 2, 'eps': 'id'}

    def test_not_minimal(self):
        outcome = execute_job(JobSpec(command='jtower', series='A', rank=2, J='s1', w='s1'))
        assert outcome['error']['code'] == CHECK_FAILED

    def test_sign_sum_job(self):
        spec = JobSpec(command='signsum', series='A', rank=2, H='', K='s1', J='s1 s2')
        outcome = execute_job(spec)
        assert outcome['ok']
        assert outcome['result']['data'] == {'value': 1}

    def test_registry(self):
        names = command_names()
        assert 'cache-admin' in names
        assert 'verify-all' in names
        assert get_callable_object('coset-reps').default_error == 'Failed to list coset representatives'
        with pytest.raises(JobError):
            get_callable_object('')


class TestReport(unittest.TestCase):
    """These tests validate report assembly and the table rendering"""

    def test_failed_suite_counterexample(self):
        suite = Suite('demo')
        suite.check(True)
        suite.check(False, {'w': 's1'})
        outcome = {'id': 0, 'ok': False, 'result': {
            'ok': False, 'data': None, 'suites': [suite.to_json()], 'table': {'header': [], 'rows': []},
        }}
        report = build_report(JobSpec(command='demo'), outcome)
        assert report['counterexample'] == {'w': 's1', 'suite': 'demo'}
        assert render_table(report) == 'FAILED: demo\nnot ok\n'

    def test_render_columns(self):
        report = {'ok': True, 'table': {'header': ['#', 'word'], 'rows': [['0', 'e'], ['1', 's2 s1']]}}
        assert render_table(report) == '#  word\n-  -----\n0  e\n1  s2 s1\nok\n'

    def test_render_error(self):
        report = {'ok': False, 'error': {'message': 'bad', 'code': 2, 'data': None}}
        assert render_table(report) == 'error: bad\nnot ok\n'
