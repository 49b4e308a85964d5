#!/usr/bin/env python
# coding=utf-8
"""
Exact elements of cyclotomic fields.

A value of Q(zeta_N) wraps a sympy ``ANP``, a polynomial in zeta_N reduced modulo the N-th cyclotomic polynomial,
so the arithmetic is that of ``QQ.cyclotomic_field(N)``. Values with different conductors are re-embedded into
the least common multiple before they are combined. ``coords`` reads the value back as rationals on the power
basis 1, zeta, ..., zeta^(phi(N)-1).
"""

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from sympy import QQ, Poly, Symbol, cyclotomic_poly
from sympy.polys.densearith import dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.polyclasses import ANP

__author__ = 'Adams Tower'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Adams Tower', 'Paul Morel']
__license__ = 'Apache 2.0'
__maintainer__ = 'Adams Tower'
__email__ = 'adams.tower@tartansolutions.com'

_X = Symbol('x')


@lru_cache(maxsize=None)
def cyclotomic_field(n):
    """Q(zeta_n) as a sympy algebraic field, with zeta_n = exp(2 pi i / n). Q itself for n <= 2."""
    if n <= 2:
        return QQ
    return QQ.cyclotomic_field(n, ss=True)


@lru_cache(maxsize=None)
def modulus(n):
    """The n-th cyclotomic polynomial over QQ, highest degree first."""
    if n <= 2:
        return tuple(QQ(int(c)) for c in Poly(cyclotomic_poly(n, _X), _X).all_coeffs())
    return tuple(QQ.convert(c) for c in cyclotomic_field(n).mod.to_list())


def cyclotomic_coefficients(n):
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    Examples:
        >>> cyclotomic_coefficients(4)
        (1, 0, 1)
        >>> cyclotomic_coefficients(6)
        (1, -1, 1)
    """
    return tuple(int(_fraction(c)) for c in reversed(modulus(n)))


def field_degree(n):
    return len(modulus(n)) - 1


def _qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _fraction(q):
    return Fraction(int(q.numerator), int(q.denominator))


class Cyclotomic:
    """An element of Q(zeta_N).

    Args:
        conductor (int): N
        coords (iterable): Rationals on 1, zeta, zeta^2, ..., of any length
    """

    __slots__ = ('conductor', 'value')

    def __init__(self, conductor, coords):
        self.conductor = int(conductor)
        mod = list(modulus(self.conductor))
        rep = dup_strip([_qq(c) for c in reversed(list(coords))])
        self.value = ANP(dup_rem(rep, mod, QQ), mod, QQ)

    @classmethod
    def from_anp(cls, conductor, value):
        """Wrap an element of ``cyclotomic_field(conductor)``, or a rational when that field is Q."""
        if not isinstance(value, ANP):
            return cls.rational(_fraction(QQ.convert(value)), conductor)
        return cls(conductor, [_fraction(c) for c in reversed(value.to_list())])

    @classmethod
    def _wrap(cls, conductor, value):
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj.value = value
        return obj

    @classmethod
    def rational(cls, value, conductor=1):
        return cls(conductor, [value])

    @classmethod
    def zero(cls, conductor=1):
        return cls(conductor, [])

    @classmethod
    def root_of_unity(cls, n, k=1):
        """zeta_n^k.

        Examples:
            >>> Cyclotomic.root_of_unity(4, 2) == -1
            True
            >>> Cyclotomic.root_of_unity(3) + Cyclotomic.root_of_unity(3, 2) == -1
            True
        """
        k %= n
        return cls(n, [0] * k + [1])

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f'Cannot use {value!r} as a cyclotomic number')

    # Structure

    @property
    def coords(self):
        degree = field_degree(self.conductor)
        coords = [_fraction(c) for c in reversed(self.value.to_list())]
        return tuple(coords + [Fraction(0)] * (degree - len(coords)))

    def to_field(self, n=None):
        """This value as an element of ``cyclotomic_field(n)``; n must be a multiple of the conductor unless the
        value is rational."""
        n = self.conductor if n is None else n
        if self.is_rational():
            q = _qq(self.to_fraction())
            return q if n <= 2 else cyclotomic_field(n).new([q])
        return cyclotomic_field(n).new(self.embed(n).value.to_list())

    def embed(self, m):
        """The same number written in Q(zeta_m); m must be a multiple of the conductor."""
        if m == self.conductor:
            return self
        if m % self.conductor:
            raise ValueError(f'Q(zeta_{self.conductor}) does not embed in Q(zeta_{m})')
        step = m // self.conductor
        coords = self.coords
        spread = [Fraction(0)] * (step * (len(coords) - 1) + 1)
        for i, c in enumerate(coords):
            spread[i * step] = c
        return Cyclotomic(m, spread)

    def galois(self, a):
        """Apply zeta -> zeta^a, for a coprime to the conductor."""
        n = self.conductor
        if gcd(a, n) != 1:
            raise ValueError(f'{a} is not a unit modulo {n}')
        spread = [Fraction(0)] * n
        for i, c in enumerate(self.coords):
            spread[(i * a) % n] += c
        return Cyclotomic(n, spread)

    def conjugate(self):
        if self.is_rational():
            return self
        return self.galois(-1 % self.conductor)

    def is_rational(self):
        return len(self.value.to_list()) <= 1

    def is_zero(self):
        return not self.value.to_list()

    def is_integral(self):
        """Membership in Z[zeta_N]: the power basis is an integral basis."""
        return all(c.denominator == 1 for c in self.coords)

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f'{self} is not rational')
        rep = self.value.to_list()
        return _fraction(rep[0]) if rep else Fraction(0)

    def to_complex(self):
        zeta = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * zeta ** i for i, c in enumerate(self.coords))

    # Arithmetic

    def _aligned(self, other):
        other = Cyclotomic.coerce(other)
        if other.conductor == self.conductor:
            return self, other
        if other.is_rational():
            return self, Cyclotomic.rational(other.to_fraction(), self.conductor)
        if self.is_rational():
            return Cyclotomic.rational(self.to_fraction(), other.conductor), other
        m = lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        try:
            a, b = self._aligned(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._wrap(a.conductor, a.value + b.value)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._wrap(self.conductor, -self.value)

    def __sub__(self, other):
        try:
            a, b = self._aligned(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._wrap(a.conductor, a.value - b.value)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._wrap(self.conductor, self.value * _qq(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.is_rational():
            return self * other.to_fraction()
        if self.is_rational():
            return other * self.to_fraction()
        a, b = self._aligned(other)
        return Cyclotomic._wrap(a.conductor, a.value * b.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            a, b = self._aligned(other)
        except TypeError:
            return NotImplemented
        if b.is_zero():
            raise ZeroDivisionError('division of a cyclotomic number by zero')
        if b.is_rational():
            return a * (1 / b.to_fraction())
        return Cyclotomic._wrap(a.conductor, a.value / b.value)

    def __rtruediv__(self, other):
        try:
            return Cyclotomic.coerce(other) / self
        except TypeError:
            return NotImplemented

    def __pow__(self, exponent):
        if exponent < 0:
            return (1 / self) ** -exponent
        return Cyclotomic._wrap(self.conductor, self.value ** int(exponent))

    # Comparison and display

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_fraction() == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._aligned(other)
        return a.value.to_list() == b.value.to_list()

    __hash__ = None

    def sort_key(self):
        return self.coords

    def __repr__(self):
        return f'Cyclotomic({self})'

    def __str__(self):
        if self.is_rational():
            return str(self.to_fraction())
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = f'z{self.conductor}' + (f'^{i}' if i > 1 else '')
                terms.append(power if c == 1 else f'-{power}' if c == -1 else f'{c}*{power}')
        return ' + '.join(terms).replace('+ -', '- ')

    def to_json(self):
        if self.is_rational():
            return str(self.to_fraction())
        return {'conductor': self.conductor, 'coords': [str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, payload):
        if isinstance(payload, (str, int)):
            return cls.rational(Fraction(payload))
        return cls(payload['conductor'], [Fraction(c) for c in payload['coords']])


def common_conductor(values):
    """The least conductor holding every irrational value; 1 when all are rational."""
    n = 1
    for value in values:
        value = Cyclotomic.coerce(value)
        if not value.is_rational():
            n = lcm(n, value.conductor)
    return n


def cyclotomic_sum(values, conductor=1):
    total = Cyclotomic.zero(conductor)
    for value in values:
        total = total + value
    return total
