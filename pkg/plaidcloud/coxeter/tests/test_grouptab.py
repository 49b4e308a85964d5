#!/usr/bin/env python
# coding=utf-8

import os
import shutil
import tempfile
import unittest
from unittest import mock

import pytest

from plaidcloud.coxeter import cache, config
from plaidcloud.coxeter.coxcore import build_weyl
from plaidcloud.coxeter.cyclotomic import Cyclotomic
from plaidcloud.coxeter.dixon import class_matrices, compute_table
from plaidcloud.coxeter.grouptab import (
    ClassFunction, FiniteGroup, GroupMismatchError, GroupOrderError, character_table, class_indicator,
    conjugacy_classes, induce, inner_product,
    parabolic_subgroup, regular, restrict, sign_character, trivial, weyl_group,
)

__author__ = "Paul Morel"
__copyright__ = "© Copyright 2024, Tartan Solutions, Inc"
__credits__ = ["Paul Morel", "Pat Buxton"]
__license__ = "Apache 2.0"
__maintainer__ = "Paul Morel"
__email__ = "paul.morel@tartansolutions.com"


def cyclic_group(n):
    return FiniteGroup.closure(f'C{n}', [1], lambda a, b: (a + b) % n, 0, lambda a: (-a) % n)


class TestFiniteGroup(unittest.TestCase):
    """These tests validate enumeration and conjugacy classes"""

    def setUp(self):
        self.datum = build_weyl('A', 2)
        self.G = weyl_group(self.datum)

    def test_classes(self):
        G = self.G
        assert G.order == 6
        assert G.class_sizes == [1, 3, 2]
        assert G.classes[0].representative == G.identity
        assert G.exponent == 6
        assert G.inverse_classes == (0, 1, 2)

    def test_class_of(self):
        G = self.G
        s1, s2 = self.datum.simple_perms
        assert G.class_of(s1) == G.class_of(s2)
        assert G.centralizer_order(s1) == 2

    def test_power_map(self):
        assert self.G.power_map(2) == (0, 0, 2)
        assert self.G.power_map(3) == (0, 1, 0)

    def test_subgroup(self):
        H = parabolic_subgroup(self.G, self.datum, {0})
        assert H.order == 2
        assert H.name == 'W_{s1}'
        assert self.G.contains_group(H)
        assert not H.contains_group(self.G)
        with pytest.raises(GroupMismatchError):
            self.G.subgroup('bad', [(9, 9, 9, 9, 9, 9)])

    def test_closure_bound(self):
        with pytest.raises(GroupOrderError) as exc_info:
            FiniteGroup.closure('C10', [1], lambda a, b: (a + b) % 10, 0, lambda a: (-a) % 10, bound=5)
        assert exc_info.value.order == 6

    def test_class_bound(self):
        with mock.patch.dict(config.CONFIG, {'group_order_bound': 4}):
            with pytest.raises(GroupOrderError):
                weyl_group(self.datum).classes

    def test_class_matrices(self):
        a = class_matrices(self.G)
        # the identity class acts as the identity matrix
        assert a[0] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


class TestCharacterTables(unittest.TestCase):
    """These tests validate exact character tables and class function operations"""

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.env = mock.patch.dict(os.environ, {config.CACHE_ENV: self.tmp})
        self.env.start()
        self.datum = build_weyl('A', 2)
        self.G = weyl_group(self.datum)

    def test_symmetric_group(self):
        table = self.G.character_table()
        assert table.degrees == [1, 1, 2]
        assert table.is_rational()
        assert table.check_orthogonality()
        assert character_table(self.G) is table
        assert len(conjugacy_classes(self.G)) == len(table.degrees)
        assert table[0] == trivial(self.G)
        assert table.index_of(sign_character(self.G, self.datum)) == 1
        assert table[2].to_json() == ['2', '0', '-1']

    def test_other_types(self):
        for series, rank, degrees in (('B', 2, [1, 1, 1, 1, 2]), ('A', 3, [1, 1, 2, 3, 3]), ('G', 2, [1, 1, 1, 1, 2, 2])):
            table = compute_table(weyl_group(build_weyl(series, rank)))
            assert table.degrees == degrees
            assert table.is_rational()

    def test_cyclic_group_is_not_rational(self):
        C3 = cyclic_group(3)
        table = C3.character_table()
        assert table.degrees == [1, 1, 1]
        assert not table.is_rational()
        assert table.check_orthogonality()
        zeta = Cyclotomic.root_of_unity(3)
        values = [[str(v) for v in chi.values] for chi in table]
        assert values[0] == ['1', '1', '1']
        assert sorted(v[1] for v in values[1:]) == sorted([str(zeta), str(zeta.conjugate())])

    def test_induce_and_restrict(self):
        G = self.G
        H = parabolic_subgroup(G, self.datum, {0})
        permutation = induce(H, trivial(H), G)
        assert permutation.to_json() == ['3', '1', '0']
        assert G.character_table().decompose(permutation) == [1, 0, 1]
        sign = sign_character(G, self.datum)
        assert restrict(G, sign, H).to_json() == ['1', '-1']
        assert inner_product(induce(H, restrict(G, sign, H), G), sign) == 1

    def test_regular(self):
        table = self.G.character_table()
        assert table.decompose(regular(self.G)) == table.degrees
        assert regular(self.G).is_character()
        assert not (-trivial(self.G)).is_character()

    def test_arithmetic(self):
        G = self.G
        chi = class_indicator(G, 1) * 3 + trivial(G)
        assert chi.to_json() == ['1', '4', '1']
        assert (chi - chi).is_zero()
        assert trivial(G).norm() == 1

    def test_group_mismatch(self):
        other = weyl_group(build_weyl('A', 2))
        with pytest.raises(GroupMismatchError):
            trivial(self.G) + trivial(other)
        with pytest.raises(GroupMismatchError):
            ClassFunction(self.G, [1, 2])
        with pytest.raises(GroupMismatchError):
            induce(other, trivial(other), cyclic_group(2))

    def test_cache_round_trip(self):
        self.G.character_table()
        assert len(cache.status()['entries']) == 1
        fresh = weyl_group(build_weyl('A', 2))
        with mock.patch('plaidcloud.coxeter.dixon.compute_table', side_effect=AssertionError('recomputed')):
            table = fresh.character_table()
        assert table.degrees == [1, 1, 2]
        assert table.group is fresh
        assert cache.clear() == 1
        assert cache.status()['entries'] == []

    def test_cache_disabled(self):
        with mock.patch.dict(config.CONFIG, {'cache': {'enabled': False}}):
            self.G.character_table()
        assert cache.status()['entries'] == []

    def test_stale_cache_ignored(self):
        self.G.character_table()
        path = cache.table_path(self.G.fingerprint)
        with open(path, 'wb') as fp:
            fp.write(b'not json')
        fresh = weyl_group(build_weyl('A', 2))
        assert fresh.character_table().degrees == [1, 1, 2]

    def tearDown(self):
        self.env.stop()
        shutil.rmtree(self.tmp)
