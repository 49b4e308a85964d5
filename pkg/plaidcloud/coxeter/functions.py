#!/usr/bin/env python
# coding=utf-8

"""
Utility functions for better functional programming, and other general purpose
functions used across the toolkit.

Note: more basic ones can be found in toolz
"""

from collections.abc import Iterable
from itertools import chain, combinations
from typing import TypeVar, Union, Any

from toolz.dicttoolz import merge_with

__author__ = 'Adams Tower'
__credits__ = ['Adams Tower', 'Paul Morel']
__maintainer__ = 'Adams Tower'
__copyright__ = '© Copyright 2011-2024 Tartan Solutions, Inc.'
__license__ = 'Apache 2.0'


T = TypeVar('T')


def subsets(items: Iterable[T]) -> list[frozenset]:
    """All subsets of items, smallest first, each size in lexicographic order of the input.

    Args:
        items (iterable): The ground set, in the order to enumerate by

    Returns:
        list: frozensets, starting with the empty set

    Examples:
        >>> [sorted(s) for s in subsets([0, 1, 2])]
        [[], [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]]
    """
    items = list(items)
    return [
        frozenset(combo)
        for combo in chain.from_iterable(combinations(items, size) for size in range(len(items) + 1))
    ]


def deepmerge(*dicts: Union[dict, Any]) -> Union[dict, Any]:
    """
    Merge objects recursively, later arguments overriding earlier ones.

    This is useful for setting default object structures but allowing overrides.

    Args:
        dicts (*args): Dicts to merge. For any key, if all values for
                       that key are dicts, they'll be merged with
                       deepmerge. If any are not dicts, the last-nondict
                       will be the value.

    Returns:
        dict: The merged dict.

    Examples:
        >>> defaults = {'rank_bound': 6, 'cache': {'enabled': True, 'format': 1}}
        >>> deepmerge(defaults, {'cache': {'enabled': False}}) == {
        ...     'rank_bound': 6,
        ...     'cache': {'enabled': False, 'format': 1},
        ... }
        True
        >>> deepmerge({'a': {'b': 1}}, {'a': 2})
        {'a': 2}
    """
    def _deepmerge(dicts: tuple[Union[dict, Any], ...]) -> Union[dict, Any]:
        # merge_with expects a non-variadic function
        for maybe_a_dict in reversed(dicts):
            if not isinstance(maybe_a_dict, dict):
                return maybe_a_dict
        return merge_with(_deepmerge, *dicts)

    return _deepmerge(dicts)


def format_subset(labels: Iterable[str]) -> str:
    """Render a set of simple labels for tables and diagnostics.

    Examples:
        >>> format_subset([])
        '∅'
        >>> format_subset(['s2', 's1'])
        '{s1,s2}'
    """
    labels = sorted(labels, key=_label_key)
    if not labels:
        return '∅'
    return '{' + ','.join(labels) + '}'


def _label_key(label: str):
    digits = ''.join(ch for ch in label if ch.isdigit())
    return (int(digits) if digits else -1, label)
