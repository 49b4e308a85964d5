#!/usr/bin/env python
# coding=utf-8
"""
Useful functions for working with files.
"""

import os
import errno
import tempfile

__author__ = 'Paul Morel'
__copyright__ = 'Copyright 2010-2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'


def makedirs(path):
    """os.makedirs, but do nothing if the dirs already exist.

    Args:
        path (str): The path to create
    """
    try:
        os.makedirs(path)
    except OSError as e:
        if e.errno == errno.EEXIST:
            # Ignore "file already exists" errors
            pass
        else:
            # But not other OSErrors
            raise


def write_bytes_atomic(path, payload):
    """Write payload to path through a temporary file in the same directory, then rename.

    Readers never see a half written file.

    Args:
        path (str): Destination file
        payload (bytes): The content
    """
    directory = os.path.dirname(os.path.abspath(path))
    makedirs(directory)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.tmp-')
    try:
        with os.fdopen(fd, 'wb') as fp:
            fp.write(payload)
        os.replace(tmp_path, path)
    except:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def read_bytes(path):
    """Read a whole file, returning None if it does not exist."""
    try:
        with open(path, 'rb') as fp:
            return fp.read()
    except FileNotFoundError:
        return None


def list_files(directory, suffix):
    """Sorted names of the files in directory ending with suffix. A missing directory lists as empty."""
    try:
        names = os.listdir(directory)
    except FileNotFoundError:
        return []
    return sorted(name for name in names if name.endswith(suffix))
