#!/usr/bin/env python
# coding=utf-8
"""
Iwahori-Hecke algebras over Z[v, v^-1] with possibly unequal parameters.

The quadratic relation is (T_s + 1)(T_s - c_s) = 0, so for a simple s and any w

    T_s T_w = T_{sw}                          if l(sw) > l(w)
    T_s T_w = (c_s - 1) T_w + c_s T_{sw}      otherwise

Products are expanded by left multiplication along the canonical reduced word of the left factor.
"""

import logging
import random
from dataclasses import dataclass

from plaidcloud.coxeter.coxcore import CoxeterDatum, build_weyl, compose, format_word, invert, simple_label
from plaidcloud.coxeter.laurent import LaurentPoly, ONE, V

__author__ = 'Adams Tower'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Adams Tower', 'Paul Morel']
__license__ = 'Apache 2.0'
__maintainer__ = 'Adams Tower'
__email__ = 'adams.tower@tartansolutions.com'

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class ParameterError(ValueError):
    """Raised for parameters that are not v^2m with m >= 1, or differ on conjugate simple reflections."""


class AlgebraMismatchError(ValueError):
    """Raised when elements of different Hecke algebras are combined."""


def _check_parameter(s, c):
    if not c.is_monomial():
        raise ParameterError(f'Parameter of {simple_label(s)} must be a monomial v^2m, got {c}')
    (exponent, coefficient), = c.terms.items()
    if coefficient != 1 or exponent < 2 or exponent % 2:
        raise ParameterError(f'Parameter of {simple_label(s)} must be v^2m with m >= 1, got {c}')


class HeckeElement:
    """A finite combination of T_w with Laurent polynomial coefficients."""

    __slots__ = ('algebra', 'terms')

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {perm: c for perm, c in terms.items() if not c.is_zero()}

    def _check(self, other):
        if not isinstance(other, HeckeElement) or other.algebra is not self.algebra:
            raise AlgebraMismatchError('Elements of different Hecke algebras')

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for perm, c in other.terms.items():
            terms[perm] = terms.get(perm, LaurentPoly()) + c
        return HeckeElement(self.algebra, terms)

    def __neg__(self):
        return HeckeElement(self.algebra, {perm: -c for perm, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            self._check(other)
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return HeckeElement(self.algebra, {perm: c * other for perm, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    __hash__ = None

    def coefficient(self, w):
        perm = w.perm if hasattr(w, 'perm') else tuple(w)
        return self.terms.get(perm, LaurentPoly())

    def is_zero(self):
        return not self.terms

    def _ordered(self):
        datum = self.algebra.datum

        def key(item):
            word = datum.reduced_word(item[0])
            return len(word), word

        return sorted(self.terms.items(), key=key)

    def __repr__(self):
        if not self.terms:
            return '0'
        datum = self.algebra.datum
        return ' + '.join(f'({c})*T[{format_word(datum.element(perm).word)}]' for perm, c in self._ordered())

    def to_json(self):
        datum = self.algebra.datum
        return {format_word(datum.element(perm).word): c.to_json() for perm, c in self._ordered()}


class HeckeAlgebra:
    """The Hecke algebra of a crystallographic datum.

    Args:
        datum (CoxeterDatum): The Weyl group
        params (dict or sequence): c_s for each simple s, as LaurentPoly of the form v^2m

    Raises:
        ParameterError: For a malformed parameter or unequal parameters on an odd edge
    """

    def __init__(self, datum, params):
        self.datum = datum
        if isinstance(params, dict):
            params = [params[s] for s in datum.simples]
        params = tuple(LaurentPoly.coerce(c) for c in params)
        if len(params) != len(datum.simples):
            raise ParameterError(f'{len(params)} parameters for {len(datum.simples)} simple reflections')
        for s, c in enumerate(params):
            _check_parameter(s, c)
        for i in datum.simples:
            for j in datum.simples:
                if i < j and datum.coxeter_matrix[i][j] % 2 == 1 and params[i] != params[j]:
                    raise ParameterError(
                        f'{simple_label(i)} and {simple_label(j)} are conjugate but have parameters '
                        f'{params[i]} and {params[j]}'
                    )
        self.params = params
        self._products = {}

    def __repr__(self):
        return f'HeckeAlgebra({self.datum.name}, c=({", ".join(str(c) for c in self.params)}))'

    @classmethod
    def equal_parameters(cls, datum, m=1):
        return cls(datum, [V ** (2 * m)] * len(datum.simples))

    # Basis

    def basis(self, w):
        if isinstance(w, str):
            w = self.datum.from_word(w)
        return HeckeElement(self, {w.perm: ONE})

    def reversed_basis(self, w):
        """t_w = T_{w^-1}: the order reversing identification, t_w t_w' = t_{w'w} when lengths add."""
        if isinstance(w, str):
            w = self.datum.from_word(w)
        return HeckeElement(self, {invert(w.perm): ONE})

    @property
    def unit(self):
        return HeckeElement(self, {self.datum.identity_perm: ONE})

    def zero(self):
        return HeckeElement(self, {})

    def scalar(self, c):
        return HeckeElement(self, {self.datum.identity_perm: LaurentPoly.coerce(c)})

    # Multiplication

    def _left_simple(self, s, terms):
        """T_s times an element given as perm -> coefficient."""
        datum = self.datum
        n = datum.n_positive
        c = self.params[s]
        result = {}

        def add(perm, value):
            result[perm] = result.get(perm, LaurentPoly()) + value

        for perm, a in terms.items():
            sw = compose(datum.simple_perms[s], perm)
            if perm.index(s) < n:
                add(sw, a)
            else:
                add(perm, a * (c - 1))
                add(sw, a * c)
        return {perm: value for perm, value in result.items() if not value.is_zero()}

    def basis_product(self, w_perm, x_perm):
        """T_w T_x as perm -> coefficient."""
        key = (w_perm, x_perm)
        if key not in self._products:
            terms = {x_perm: ONE}
            for s in reversed(self.datum.reduced_word(w_perm)):
                terms = self._left_simple(s, terms)
            self._products[key] = terms
        return self._products[key]

    def multiply(self, h1, h2):
        """Raises:
            AlgebraMismatchError: If either factor belongs to another algebra
        """
        if h1.algebra is not self or h2.algebra is not self:
            raise AlgebraMismatchError('Elements of different Hecke algebras')
        result = {}
        for w, a in h1.terms.items():
            for x, b in h2.terms.items():
                ab = a * b
                for y, c in self.basis_product(w, x).items():
                    result[y] = result.get(y, LaurentPoly()) + ab * c
        return HeckeElement(self, result)

    # Maps

    def partial(self, h):
        """The anti-automorphism T_w -> T_{w^-1}."""
        return HeckeElement(self, {invert(perm): c for perm, c in h.terms.items()})

    def beta(self, h):
        """Coefficientwise v -> v^-1, fixing every T_w."""
        return HeckeElement(self, {perm: c.bar() for perm, c in h.terms.items()})

    def tau(self, h):
        """The T_e coefficient."""
        return h.terms.get(self.datum.identity_perm, LaurentPoly())

    def pairing(self, h1, h2):
        """(h1 : h2) = tau(h1 partial(h2))."""
        return self.tau(self.multiply(h1, self.partial(h2)))

    def specialize_at_one(self, h):
        """The group algebra element at v = 1, as perm -> integer."""
        values = {perm: c.evaluate(1) for perm, c in h.terms.items()}
        return {perm: value for perm, value in values.items() if value}

    # Checks

    def quadratic_holds(self, s):
        T = self.basis(self.datum.simple(s))
        return (T + self.unit) * (T - self.scalar(self.params[s])) == self.zero()

    def associativity_holds(self, triples):
        for x, y, z in triples:
            a, b, c = self.basis(x), self.basis(y), self.basis(z)
            if (a * b) * c != a * (b * c):
                logger.warning('Associativity fails on %s, %s, %s', x, y, z)
                return False
        return True

    def exhaustive_triples(self):
        elements = self.datum.elements()
        return [(x, y, z) for x in elements for y in elements for z in elements]

    def random_triples(self, count, seed=0):
        elements = self.datum.elements()
        rng = random.Random(seed)
        return [(rng.choice(elements), rng.choice(elements), rng.choice(elements)) for _ in range(count)]

    def specialization_holds(self):
        """At v = 1 the basis products reproduce the multiplication of W."""
        elements = self.datum.elements()
        for w in elements:
            for x in elements:
                product = self.specialize_at_one(HeckeElement(self, self.basis_product(w.perm, x.perm)))
                if product != {compose(w.perm, x.perm): 1}:
                    return False
        return True


def build_hecke(datum, params):
    return HeckeAlgebra(datum, params)


def multiply(h1, h2):
    h1._check(h2)
    return h1.algebra.multiply(h1, h2)


def partial_antimap(h):
    return h.algebra.partial(h)


def beta_bar(h):
    return h.algebra.beta(h)


def tau_pairing(h1, h2):
    h1._check(h2)
    return h1.algebra.pairing(h1, h2)


@dataclass(frozen=True)
class SpModel:
    n: int
    k: int
    a: int
    algebra: object

    @property
    def admissible(self):
        return self.a is not None

    def to_json(self):
        payload = {'n': self.n, 'k': self.k, 'admissible': self.admissible, 'a': self.a}
        if self.algebra is not None:
            payload['type'] = f'B{self.k}' if self.k else 'trivial'
            payload['params'] = [c.to_json() for c in self.algebra.params]
        return payload


def sp_model(n, k):
    """The Hecke algebra attached to (n, k): admissible when n - k = a^2 + a.

    For k >= 1 this is type B_k with c = v^2 on the first k - 1 nodes and v^(4a+2) on the last node; for k = 0 the
    rank zero algebra.

    Examples:
        >>> sp_model(2, 1).admissible
        False
        >>> [str(c) for c in sp_model(6, 4).algebra.params]
        ['v^2', 'v^2', 'v^2', 'v^6']
    """
    if n < 1 or not 0 <= k <= n:
        raise ParameterError(f'Need 1 <= n and 0 <= k <= n, got n={n}, k={k}')
    a = next((a for a in range(n - k + 1) if a * a + a == n - k), None)
    if a is None:
        return SpModel(n, k, None, None)
    if k == 0:
        return SpModel(n, k, a, HeckeAlgebra(CoxeterDatum.trivial(), []))
    params = [V ** 2] * (k - 1) + [V ** (4 * a + 2)]
    return SpModel(n, k, a, HeckeAlgebra(build_weyl('B', k), params))
