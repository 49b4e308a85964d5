#!/usr/bin/env python
# coding=utf-8

import unittest

import pytest

from plaidcloud.coxeter.config import get_setting
from plaidcloud.coxeter.coxcore import build_weyl
from plaidcloud.coxeter.hecke import (
    AlgebraMismatchError, HeckeAlgebra, ParameterError, beta_bar, build_hecke, multiply, partial_antimap,
    sp_model, tau_pairing,
)
from plaidcloud.coxeter.laurent import LaurentPoly, ONE, V, ZERO

__author__ = "Adams Tower"
__copyright__ = "© Copyright 2024, Tartan Solutions, Inc"
__credits__ = ["Adams Tower"]
__license__ = "Apache 2.0"
__maintainer__ = "Adams Tower"
__email__ = "adams.tower@tartansolutions.com"


class TestLaurentPoly(unittest.TestCase):
    """These tests validate Laurent polynomial arithmetic"""

    def test_arithmetic(self):
        assert (V + 1) * (V - 1) == V ** 2 - 1
        assert V * V.bar() == ONE
        assert V - V == ZERO
        assert 2 - V == -(V - 2)

    def test_str(self):
        assert str(ZERO) == '0'
        assert str(3 * V ** 2 - V + 1) == '3*v^2 - v + 1'
        assert str(-V.bar()) == '-v^-1'

    def test_degrees_and_evaluate(self):
        poly = V ** 3 + 2 * V.bar()
        assert poly.degree == 3
        assert poly.low_degree == -1
        assert poly.evaluate(1) == 3
        assert poly.evaluate(2) == 9
        assert LaurentPoly.monomial(-2).evaluate(2) == LaurentPoly.monomial(-2).evaluate(-2)

    def test_hashable(self):
        assert len({V + 1, 1 + V, V}) == 2

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            LaurentPoly.coerce(1.5)


class TestHeckeAlgebra(unittest.TestCase):
    """These tests validate multiplication and the maps of the Hecke algebra"""

    def setUp(self):
        self.a2 = build_weyl('A', 2)
        self.h = HeckeAlgebra.equal_parameters(self.a2)

    def test_length_additive_product(self):
        h = self.h
        assert h.basis('s1') * h.basis('s2') == h.basis('s1 s2')
        assert h.basis('s1 s2') * h.basis('s1') == h.basis('s1 s2 s1')

    def test_quadratic_relation(self):
        h = self.h
        T = h.basis('s1')
        q = V ** 2
        assert T * T == (q - 1) * T + h.scalar(q)
        assert all(h.quadratic_holds(s) for s in self.a2.simples)

    def test_associativity_exhaustive(self):
        assert self.h.associativity_holds(self.h.exhaustive_triples())

    def test_unit(self):
        h = self.h
        for w in self.a2.elements():
            assert h.unit * h.basis(w) == h.basis(w)
            assert h.basis(w) * h.unit == h.basis(w)

    def test_partial_is_anti_multiplicative(self):
        h = self.h
        x, y = h.basis('s1') + 2 * h.basis('s2'), h.basis('s2 s1')
        assert partial_antimap(x * y) == partial_antimap(y) * partial_antimap(x)
        assert partial_antimap(h.basis('s1 s2')) == h.basis('s2 s1')

    def test_beta_inverts_v(self):
        h = self.h
        assert beta_bar(V * h.basis('s1')) == V.bar() * h.basis('s1')
        assert beta_bar(h.basis('s1')) == h.basis('s1')

    def test_pairing_is_orthogonal(self):
        h = self.h
        elements = self.a2.elements()
        for w in elements:
            for x in elements:
                value = tau_pairing(h.basis(w), h.basis(x))
                if w == x:
                    assert value == V ** (2 * self.a2.length(w))
                else:
                    assert value.is_zero()

    def test_specialization(self):
        assert self.h.specialization_holds()

    def test_reversed_basis_reverses_order(self):
        h = self.h
        t1, t2 = h.reversed_basis('s1'), h.reversed_basis('s2')
        assert t1 * t2 == h.reversed_basis('s2 s1')

    def test_mismatch(self):
        other = HeckeAlgebra.equal_parameters(self.a2)
        with pytest.raises(AlgebraMismatchError):
            self.h.basis('s1') + other.basis('s1')
        with pytest.raises(AlgebraMismatchError):
            multiply(self.h.basis('s1'), other.basis('s1'))

    def test_repr_and_json(self):
        h = self.h
        x = V * h.basis('s1') + h.unit
        assert repr(x) == '(1)*T[e] + (v)*T[s1]'
        assert x.to_json() == {'e': {'0': 1}, 's1': {'1': 1}}


class TestHeckeB3(unittest.TestCase):
    """These tests validate the B3 Hecke algebra with unequal parameters on random triples"""

    def setUp(self):
        self.b3 = build_weyl('B', 3)
        self.h = build_hecke(self.b3, {0: V ** 2, 1: V ** 2, 2: V ** 4})

    def test_relations(self):
        h = self.h
        assert all(h.quadratic_holds(s) for s in self.b3.simples)
        assert h.specialization_holds()

    def test_random_associativity(self):
        count = get_setting('random_triples', 10000)
        assert count >= 10000
        triples = self.h.random_triples(count)
        assert len(triples) == count
        assert self.h.associativity_holds(triples)

    def test_braid_relations(self):
        h = self.h
        t1, t2, t3 = h.basis('s1'), h.basis('s2'), h.basis('s3')
        assert t1 * t2 * t1 == t2 * t1 * t2
        assert t2 * t3 * t2 * t3 == t3 * t2 * t3 * t2
        assert t1 * t3 == t3 * t1

    def test_pairing_and_adjunction(self):
        h = self.h
        elements = self.b3.elements()
        for w in elements:
            for x in elements:
                if w.perm != x.perm:
                    assert tau_pairing(h.basis(w), h.basis(x)).is_zero()
        for s, c in enumerate(h.params):
            T = h.basis(self.b3.simple(s))
            assert tau_pairing(T, T) == c
        for x, y, z in h.random_triples(200, seed=7):
            h1, h2, h3 = h.basis(x), h.basis(y), h.basis(z)
            assert partial_antimap(h1 * h2) == partial_antimap(h2) * partial_antimap(h1)
            assert tau_pairing(h1 * h2, partial_antimap(h3)) == tau_pairing(partial_antimap(h1), h2 * h3)


class TestParameters(unittest.TestCase):
    """These tests validate parameter checks and unequal parameters"""

    def test_rejects_malformed(self):
        a1 = build_weyl('A', 1)
        for bad in (V ** 3, 2 * V ** 2, V ** 2 + 1, ONE):
            with pytest.raises(ParameterError):
                build_hecke(a1, [bad])
        with pytest.raises(ParameterError):
            build_hecke(a1, [V ** 2, V ** 2])

    def test_rejects_unequal_on_odd_edge(self):
        with pytest.raises(ParameterError):
            build_hecke(build_weyl('A', 2), [V ** 2, V ** 4])

    def test_unequal_b2(self):
        b2 = build_weyl('B', 2)
        h = build_hecke(b2, {0: V ** 2, 1: V ** 4})
        T = h.basis('s2')
        assert T * T == (V ** 4 - 1) * T + h.scalar(V ** 4)
        assert h.associativity_holds(h.exhaustive_triples())
        assert tau_pairing(h.basis('s1 s2'), h.basis('s1 s2')) == V ** 6

    def test_sp_model(self):
        assert not sp_model(2, 1).admissible
        model = sp_model(3, 1)
        assert model.a == 1
        assert [str(c) for c in model.algebra.params] == ['v^6']
        assert sp_model(2, 0).to_json() == {'n': 2, 'k': 0, 'admissible': True, 'a': 1, 'type': 'trivial', 'params': []}
        assert sp_model(5, 5).to_json()['params'] == [{'2': 1}] * 4 + [{'2': 1}]
        with pytest.raises(ParameterError):
            sp_model(2, 3)
