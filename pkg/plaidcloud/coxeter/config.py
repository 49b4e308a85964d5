#!/usr/bin/env python
# coding=utf-8
"""
Toolkit Config
Load configuration files and provide access to their settings.
"""

import os
import logging
from pathlib import Path

import yaml
from toolz.dicttoolz import get_in

from plaidcloud.coxeter.functions import deepmerge

__author__ = 'Paul Morel'
__copyright__ = 'Copyright 2010-2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'

# Make a logger
logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

CONFIG_NAME = 'coxeter.yaml'
CONFIG_DIR = '.plaid'
CACHE_ENV = '__PLAID_COXETER_CACHE__'
DEFAULT_CACHE_DIR = os.path.join('~', CONFIG_DIR, 'coxeter_cache')

DEFAULTS = {
    'rank_bound': 6,
    'group_order_bound': 5000,
    'extension_order_bound': 2500,
    'random_triples': 10000,
    'cache': {
        'enabled': True,
    },
}

# Module level CONFIG dict - mutable, and importable from this module.
CONFIG = deepmerge(DEFAULTS, {})


def get_dict():
    return CONFIG


def reset():
    """Drop any loaded settings and go back to the packaged defaults."""
    CONFIG.clear()
    CONFIG.update(deepmerge(DEFAULTS, {}))


def get_setting(path, default=None):
    """Read a setting by dotted path.

    Args:
        path (str): Dotted key path, e.g. ``'cache.enabled'``
        default: Returned when the path is not present

    Returns:
        The configured value

    Examples:
        >>> get_setting('rank_bound')
        6
        >>> get_setting('cache.enabled')
        True
        >>> get_setting('cache.missing', 'fallback')
        'fallback'
    """
    return get_in(path.split('.'), CONFIG, default)


def load_config_files(paths):
    """(Re)load config file(s) in use by the configuration. Newer config keys replace older config keys.

    Nested sections are merged, so a file that only sets ``cache: {enabled: false}`` keeps the other defaults.

    Args:
        paths (:type:`list` of :type:`str`): The paths to the config files to load"""

    for path in paths:
        try:
            if path[-5:] == '.yaml' and not os.path.basename(path).startswith('__'):
                with open(path, 'r') as config_fp:
                    loaded = yaml.safe_load(config_fp) or {}
                merged = deepmerge(CONFIG, loaded)
                CONFIG.clear()
                CONFIG.update(merged)
            else:
                logger.warning("Skipping: Will not load config from {}".format(path))
        except:
            logger.exception("Could not load config from {}".format(path))


def cache_directory():
    """The character table cache directory.

    Taken from the ``__PLAID_COXETER_CACHE__`` environment variable, falling back to ``~/.plaid/coxeter_cache``.

    Returns:
        str: An absolute path
    """
    return os.path.abspath(os.path.expanduser(os.environ.get(CACHE_ENV) or DEFAULT_CACHE_DIR))


def find_coxeter_conf(path=None):
    """Finds coxeter.yaml by searching upwards for first coxeter.yaml it finds"""
    root = find_workspace_root(path)
    direct = root.joinpath(CONFIG_NAME)
    one_down = root.joinpath(CONFIG_DIR, CONFIG_NAME)
    if direct.exists():
        return direct
    return one_down


def find_workspace_root(path=None):
    """Finds the workspace root by searching upwards for first coxeter.yaml it finds

    Raises:
        FileNotFoundError: When no directory up to the filesystem root holds a config file
    """
    if path:
        path = Path(path).resolve()
    else:
        path = Path.cwd()

    def recurse(path):
        if (
            path.joinpath(CONFIG_NAME).exists()
            or path.joinpath(CONFIG_DIR, CONFIG_NAME).exists()
        ):
            return path
        elif path == path.parent:
            # We've hit the filesystem root
            raise FileNotFoundError(
                f'Could not find {CONFIG_NAME}, starting at {str(path)}, '
                f'checking sub_folder {CONFIG_DIR}'
            )
        else:
            return recurse(path.parent)

    return recurse(path)


def load_workspace_config(path=None):
    """Load the nearest coxeter.yaml, if any. Returns the path loaded, or None."""
    try:
        conf = find_coxeter_conf(path)
    except FileNotFoundError:
        logger.debug('No %s found, using packaged defaults', CONFIG_NAME)
        return None
    load_config_files([str(conf)])
    return str(conf)
