# coding=utf-8

import unittest
from fractions import Fraction

import orjson as json
import pytest

from plaidcloud.coxeter.coxcore import build_weyl
from plaidcloud.coxeter.cyclotomic import Cyclotomic
from plaidcloud.coxeter.jtower import j_infinity
from plaidcloud.coxeter.laurent import V
from plaidcloud.coxeter.orjson import dumps, loads, unsupported_object_json_encoder as enc

__author__ = "Pat Buxton"
__copyright__ = "© Copyright 2024, Tartan Solutions, Inc"
__credits__ = ["Pat Buxton"]
__license__ = "Apache 2.0"
__maintainer__ = "Pat Buxton"
__email__ = "patrick.buxton@tartansolutions.com"


class TestDefaultEncoder(unittest.TestCase):
    """These tests validate all aspects of the default encoder method for orjson"""

    def setUp(self):
        pass

    def test_handles_bytes(self):
        self.assertEqual(json.dumps({'check': bytes('This is some bytes', 'utf-8')}, default=enc), b'{"check":"This is some bytes"}')

    def test_handles_fraction(self):
        self.assertEqual(json.dumps({'check': Fraction(-3, 4)}, default=enc), b'{"check":"-3/4"}')
        self.assertEqual(json.dumps({'check': Fraction(6, 3)}, default=enc), b'{"check":"2"}')

    def test_handles_set(self):
        self.assertEqual(json.dumps({'check': {3, 1, 2}}, default=enc), b'{"check":[1,2,3]}')
        self.assertEqual(json.dumps({'check': frozenset()}, default=enc), b'{"check":[]}')

    def test_handles_cyclotomic(self):
        self.assertEqual(json.dumps({'check': Cyclotomic.rational(Fraction(1, 2))}, default=enc), b'{"check":"1/2"}')
        self.assertEqual(
            json.dumps({'check': Cyclotomic.root_of_unity(4)}, default=enc),
            b'{"check":{"conductor":4,"coords":["0","1"]}}',
        )

    def test_handles_laurent(self):
        self.assertEqual(json.dumps({'check': V ** 2 - 1}, default=enc), b'{"check":{"0":-1,"2":1}}')

    def test_handles_group_element(self):
        datum = build_weyl('A', 2)
        self.assertEqual(
            json.dumps({'check': datum.from_word('s2 s1')}, default=enc, option=json.OPT_PASSTHROUGH_DATACLASS),
            b'{"check":"s2 s1"}',
        )

    def test_raises_on_unknown(self):
        class UnsupportedType():
            pass
        with pytest.raises(json.JSONEncodeError):
            json.dumps({'check': UnsupportedType()}, default=enc)

    def tearDown(self):
        pass


class TestDumps(unittest.TestCase):
    """These tests validate the deterministic dump helper"""

    def test_sorted_keys(self):
        assert dumps({'b': 1, 'a': 2}) == dumps({'a': 2, 'b': 1})
        assert dumps({'b': 1, 'a': 2}).index(b'"a"') < dumps({'b': 1, 'a': 2}).index(b'"b"')

    def test_round_trip(self):
        payload = {'schema': 1, 'values': ['1/2', '3']}
        assert loads(dumps(payload)) == payload

    def test_dataclasses_encode_themselves(self):
        datum = build_weyl('A', 2)
        chain = j_infinity(datum, {0}, datum.from_word('s2'), datum.named_automorphism('id'))
        payload = {'w': datum.from_word('s1 s2'), 'chain': chain}
        decoded = loads(dumps(payload))
        assert decoded['w'] == 's1 s2'
        assert decoded['chain'] == loads(dumps(payload['chain'].to_json()))
