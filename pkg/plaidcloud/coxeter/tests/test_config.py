#!/usr/bin/env python
# coding=utf-8

import os
import shutil
import tempfile
import unittest
from unittest import mock

import pytest

from plaidcloud.coxeter import config

__author__ = "Pat Buxton"
__copyright__ = "© Copyright 2024, Tartan Solutions, Inc"
__credits__ = ["Pat Buxton"]
__license__ = "Apache 2.0"
__maintainer__ = "Pat Buxton"
__email__ = "patrick.buxton@tartansolutions.com"


class TestSettings(unittest.TestCase):
    """These tests validate reading and loading of settings"""

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        config.reset()

    def write(self, name, text):
        path = os.path.join(self.tmp, name)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, 'w') as fp:
            fp.write(text)
        return path

    def test_defaults(self):
        assert config.get_setting('rank_bound') == 6
        assert config.get_setting('group_order_bound') == 5000
        assert config.get_setting('extension_order_bound') == 2500
        assert config.get_setting('random_triples') == 10000
        assert config.get_setting('cache.enabled') is True

    def test_missing_setting_uses_default(self):
        assert config.get_setting('no.such.key', 42) == 42

    def test_load_merges_nested_sections(self):
        path = self.write('coxeter.yaml', 'rank_bound: 4\ncache:\n  enabled: false\n')
        config.load_config_files([path])
        assert config.get_setting('rank_bound') == 4
        assert config.get_setting('cache.enabled') is False
        assert config.get_setting('group_order_bound') == 5000

    def test_later_files_win(self):
        first = self.write('a.yaml', 'rank_bound: 4\n')
        second = self.write('b.yaml', 'rank_bound: 5\n')
        config.load_config_files([first, second])
        assert config.get_setting('rank_bound') == 5

    def test_skips_non_yaml_and_dunder_files(self):
        other = self.write('settings.conf', 'rank_bound: 2\n')
        dunder = self.write('__private.yaml', 'rank_bound: 3\n')
        config.load_config_files([other, dunder])
        assert config.get_setting('rank_bound') == 6

    def test_unreadable_file_is_skipped(self):
        config.load_config_files([os.path.join(self.tmp, 'missing.yaml')])
        assert config.get_setting('rank_bound') == 6

    def test_get_dict_is_live(self):
        config.get_dict()['rank_bound'] = 3
        assert config.get_setting('rank_bound') == 3

    def tearDown(self):
        config.reset()
        shutil.rmtree(self.tmp)


class TestWorkspace(unittest.TestCase):
    """These tests validate the search for coxeter.yaml and the cache directory setting"""

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        config.reset()

    def test_finds_config_in_plaid_folder(self):
        os.makedirs(os.path.join(self.tmp, '.plaid'))
        with open(os.path.join(self.tmp, '.plaid', 'coxeter.yaml'), 'w') as fp:
            fp.write('rank_bound: 5\n')
        nested = os.path.join(self.tmp, 'a', 'b')
        os.makedirs(nested)
        assert str(config.find_workspace_root(nested)) == os.path.realpath(self.tmp)
        assert config.load_workspace_config(nested) is not None
        assert config.get_setting('rank_bound') == 5

    def test_direct_config_preferred(self):
        with open(os.path.join(self.tmp, 'coxeter.yaml'), 'w') as fp:
            fp.write('{}\n')
        assert config.find_coxeter_conf(self.tmp).name == 'coxeter.yaml'
        assert config.find_coxeter_conf(self.tmp).parent.name != '.plaid'

    def test_cache_directory_from_environment(self):
        target = os.path.join(self.tmp, 'tables')
        with mock.patch.dict(os.environ, {config.CACHE_ENV: target}):
            assert config.cache_directory() == os.path.abspath(target)

    def test_cache_directory_default(self):
        with mock.patch.dict(os.environ, {config.CACHE_ENV: ''}):
            assert config.cache_directory().endswith(os.path.join('.plaid', 'coxeter_cache'))

    def tearDown(self):
        config.reset()
        shutil.rmtree(self.tmp)


def test_missing_workspace_raises(tmp_path, monkeypatch):
    monkeypatch.setattr(config, 'CONFIG_NAME', 'surely-not-present-coxeter.yaml')
    with pytest.raises(FileNotFoundError):
        config.find_workspace_root(str(tmp_path))
