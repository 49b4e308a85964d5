#!/usr/bin/env python
# coding=utf-8
"""
Laurent polynomials in v with integer coefficients.
"""

import operator
from fractions import Fraction

from toolz.dicttoolz import merge_with, valfilter

__author__ = 'Adams Tower'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Adams Tower']
__license__ = 'Apache 2.0'
__maintainer__ = 'Adams Tower'
__email__ = 'adams.tower@tartansolutions.com'


class LaurentPoly:
    """An immutable element of Z[v, v^-1], stored as exponent -> nonzero coefficient.

    Examples:
        >>> v = LaurentPoly.monomial(1)
        >>> str((v + 1) * (v - 1))
        'v^2 - 1'
        >>> str((v ** 2).bar())
        'v^-2'
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        terms = dict(terms or {})
        self._terms = {int(e): int(c) for e, c in valfilter(bool, terms).items()}

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f'Cannot use {value!r} as a Laurent polynomial')

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, exponent):
        return self._terms.get(exponent, 0)

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    @property
    def degree(self):
        return max(self._terms) if self._terms else None

    @property
    def low_degree(self):
        return min(self._terms) if self._terms else None

    def bar(self):
        """v -> v^-1"""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def evaluate(self, value):
        value = Fraction(value)
        total = sum((c * value ** e for e, c in self._terms.items()), Fraction(0))
        return int(total) if total.denominator == 1 else total

    # Arithmetic

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly(merge_with(sum, self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        product = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        if self.is_monomial():
            (e, c), = self._terms.items()
            return LaurentPoly.monomial(e * exponent, c ** exponent)
        result = LaurentPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def __repr__(self):
        return f'LaurentPoly({self})'

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            power = '' if e == 0 else 'v' if e == 1 else f'v^{e}'
            if not power:
                body = str(abs(c))
            elif abs(c) == 1:
                body = power
            else:
                body = f'{abs(c)}*{power}'
            sign = '-' if c < 0 else '+'
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in pieces[1:]:
            text += f' {sign} {body}'
        return text

    def to_json(self):
        return {str(e): c for e, c in sorted(self._terms.items(), key=operator.itemgetter(0))}


V = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()
