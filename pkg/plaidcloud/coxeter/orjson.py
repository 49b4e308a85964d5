#!/usr/bin/env python
# coding=utf-8
"""Default encoder and dump helpers for orjson, keeping exact values exact"""

import fractions

import orjson as json

__author__ = 'Pat Buxton'
__maintainer__ = 'Paul Morel'
__copyright__ = '© Copyright 2020-2024 Tartan Solutions, Inc.'
__license__ = 'Apache 2.0'

DUMP_OPTIONS = json.OPT_NON_STR_KEYS | json.OPT_SORT_KEYS | json.OPT_INDENT_2 | json.OPT_PASSTHROUGH_DATACLASS


def unsupported_object_json_encoder(obj):
    """Encode the exact types orjson does not know about.

    Rationals become ``"n/d"`` strings (integers stay ``"n"``), objects exposing ``to_json`` encode
    themselves, sets become sorted lists. Dataclasses reach here only with ``OPT_PASSTHROUGH_DATACLASS``.
    """
    if isinstance(obj, fractions.Fraction):
        return str(obj)
    elif hasattr(obj, 'to_json'):
        return obj.to_json()
    elif isinstance(obj, (set, frozenset)):
        try:
            return sorted(obj)
        except TypeError:
            return sorted(obj, key=repr)
    elif isinstance(obj, bytes):
        return obj.decode('utf-8')
    else:
        raise TypeError


def dumps(obj):
    """Deterministic JSON bytes for reports and cache files."""
    return json.dumps(obj, default=unsupported_object_json_encoder, option=DUMP_OPTIONS)


def loads(payload):
    return json.loads(payload)
