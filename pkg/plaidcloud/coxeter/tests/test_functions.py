#!/usr/bin/env python
# coding=utf-8

import io
import os
import shutil
import tempfile
import unittest

from plaidcloud.coxeter import file_helpers
from plaidcloud.coxeter.functions import deepmerge, format_subset, subsets
from plaidcloud.coxeter.logger import Logger

__author__ = "Adams Tower"
__copyright__ = "© Copyright 2024, Tartan Solutions, Inc"
__credits__ = ["Adams Tower"]
__license__ = "Apache 2.0"
__maintainer__ = "Adams Tower"
__email__ = "adams.tower@tartansolutions.com"


class TestFunctions(unittest.TestCase):
    """These tests validate the general purpose helpers"""

    def test_subsets_order(self):
        result = subsets(['s1', 's2'])
        assert result == [frozenset(), frozenset({'s1'}), frozenset({'s2'}), frozenset({'s1', 's2'})]
        assert len(subsets(range(4))) == 16

    def test_deepmerge(self):
        merged = deepmerge({'a': {'b': 1, 'c': 2}}, {'a': {'c': 3}}, {'d': 4})
        assert merged == {'a': {'b': 1, 'c': 3}, 'd': 4}

    def test_format_subset(self):
        assert format_subset([]) == '∅'
        assert format_subset(['s10', 's2']) == '{s2,s10}'


class TestLogger(unittest.TestCase):
    """These tests validate the collecting suite logger"""

    def test_collects_at_verbosity(self):
        log = Logger('test-collect', verbosity=1, stream=io.StringIO())
        log.debug('hidden')
        log.info('shown')
        log.warning('careful')
        assert log.records == [
            {'level': 'info', 'message': 'INFO     shown'},
            {'level': 'warning', 'message': 'WARNING  careful'},
        ]

    def test_default_is_warning(self):
        log = Logger('test-default', stream=io.StringIO())
        log.info('hidden')
        assert log.records == []

    def test_no_collection(self):
        stream = io.StringIO()
        log = Logger('test-echo', collect=False, stream=stream)
        log.warning('echoed')
        assert log.records == []
        assert 'echoed' in stream.getvalue()


class TestFileHelpers(unittest.TestCase):
    """These tests validate the atomic write and listing helpers"""

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def test_write_and_read(self):
        path = os.path.join(self.tmp, 'deep', 'er', 'report.json')
        file_helpers.write_bytes_atomic(path, b'{}')
        assert file_helpers.read_bytes(path) == b'{}'
        file_helpers.write_bytes_atomic(path, b'[]')
        assert file_helpers.read_bytes(path) == b'[]'
        assert os.listdir(os.path.dirname(path)) == ['report.json']

    def test_read_missing(self):
        assert file_helpers.read_bytes(os.path.join(self.tmp, 'nothing')) is None

    def test_list_files(self):
        for name in ('b.json', 'a.json', 'c.txt'):
            file_helpers.write_bytes_atomic(os.path.join(self.tmp, name), b'')
        assert file_helpers.list_files(self.tmp, '.json') == ['a.json', 'b.json']
        assert file_helpers.list_files(os.path.join(self.tmp, 'missing'), '.json') == []

    def test_makedirs_twice(self):
        target = os.path.join(self.tmp, 'x')
        file_helpers.makedirs(target)
        file_helpers.makedirs(target)
        assert os.path.isdir(target)

    def tearDown(self):
        shutil.rmtree(self.tmp)
