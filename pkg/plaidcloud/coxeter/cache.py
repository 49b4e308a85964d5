#!/usr/bin/env python
# coding=utf-8
"""
On disk cache of character tables, one versioned JSON file per group fingerprint.
"""

import hashlib
import logging
import os
from fractions import Fraction

from plaidcloud.coxeter import file_helpers
from plaidcloud.coxeter.config import cache_directory, get_setting
from plaidcloud.coxeter.cyclotomic import Cyclotomic
from plaidcloud.coxeter.orjson import dumps, loads

__author__ = 'Pat Buxton'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Pat Buxton', 'Paul Morel']
__license__ = 'Apache 2.0'
__maintainer__ = 'Pat Buxton'
__email__ = 'pat.buxton@tartansolutions.com'

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

SCHEMA = 1
SUFFIX = '.json'


def _enabled():
    return bool(get_setting('cache.enabled', True))


def table_path(fingerprint):
    digest = hashlib.sha256(fingerprint.encode('utf-8')).hexdigest()[:24]
    return os.path.join(cache_directory(), digest + SUFFIX)


def _class_data(G):
    return [{'representative': G.index[c.representative], 'size': c.size} for c in G.classes]


def store_table(table):
    """Write a table to the cache. Groups without a fingerprint are skipped.

    Returns:
        str or None: The path written
    """
    G = table.group
    if not G.fingerprint or not _enabled():
        return None
    payload = {
        'schema': SCHEMA,
        'fingerprint': G.fingerprint,
        'name': G.name,
        'order': G.order,
        'conductor': table.conductor,
        'classes': _class_data(G),
        'characters': [
            [[str(c) for c in value.embed(table.conductor).coords] for value in chi.values]
            for chi in table.irreducibles
        ],
    }
    path = table_path(G.fingerprint)
    file_helpers.write_bytes_atomic(path, dumps(payload))
    logger.debug('Stored table of %s at %s', G.name, path)
    return path


def load_table(G):
    """Read a cached table, or None when absent, stale or unreadable.

    Class data must match the group exactly; a mismatching file is ignored and later overwritten.
    """
    from plaidcloud.coxeter.grouptab import CharacterTable, ClassFunction

    if not G.fingerprint or not _enabled():
        return None
    path = table_path(G.fingerprint)
    raw = file_helpers.read_bytes(path)
    if raw is None:
        return None
    try:
        payload = loads(raw)
    except Exception:
        logger.warning('Unreadable table cache file %s', path)
        return None
    if (
        payload.get('schema') != SCHEMA
        or payload.get('fingerprint') != G.fingerprint
        or payload.get('order') != G.order
        or payload.get('classes') != _class_data(G)
    ):
        logger.warning('Stale table cache file %s for %s, recomputing', path, G.name)
        return None
    conductor = payload['conductor']
    characters = [
        ClassFunction(G, [Cyclotomic(conductor, [Fraction(c) for c in value]) for value in row])
        for row in payload['characters']
    ]
    logger.debug('Loaded table of %s from %s', G.name, path)
    return CharacterTable(G, characters, conductor)


def status():
    directory = cache_directory()
    entries = []
    for name in file_helpers.list_files(directory, SUFFIX):
        raw = file_helpers.read_bytes(os.path.join(directory, name))
        try:
            payload = loads(raw)
            entries.append({
                'file': name,
                'name': payload.get('name'),
                'order': payload.get('order'),
                'classes': len(payload.get('classes', [])),
                'schema': payload.get('schema'),
            })
        except Exception:
            entries.append({'file': name, 'name': None, 'order': None, 'classes': None, 'schema': None})
    return {'directory': directory, 'enabled': _enabled(), 'entries': entries}


def clear():
    """Remove every cached table. Returns the number of files removed."""
    directory = cache_directory()
    removed = 0
    for name in file_helpers.list_files(directory, SUFFIX):
        os.remove(os.path.join(directory, name))
        removed += 1
    logger.info('Removed %d cached tables from %s', removed, directory)
    return removed
