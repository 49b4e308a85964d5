#!/usr/bin/env python
# coding=utf-8

import os
import shutil
import tempfile
import unittest
from fractions import Fraction
from unittest import mock

import pytest

from plaidcloud.coxeter import config
from plaidcloud.coxeter import hcduality as hc
from plaidcloud.coxeter.coxcore import NotMinimalError, build_weyl
from plaidcloud.coxeter.cyclotomic import Cyclotomic

__author__ = "Paul Morel"
__copyright__ = "© Copyright 2024, Tartan Solutions, Inc"
__credits__ = ["Paul Morel"]
__license__ = "Apache 2.0"
__maintainer__ = "Paul Morel"
__email__ = "paul.morel@tartansolutions.com"

S1 = frozenset({0})
S2 = frozenset({1})
EMPTY = frozenset()


class ContextTestCase(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.env = mock.patch.dict(os.environ, {config.CACHE_ENV: self.tmp})
        self.env.start()
        self.a2 = build_weyl('A', 2)
        self.ctx = hc.ParabolicContext(self.a2)
        self.twisted = hc.ParabolicContext(self.a2, self.a2.named_automorphism('flip'))
        self.I = self.ctx.I

    def tearDown(self):
        self.env.stop()
        shutil.rmtree(self.tmp)


class TestParabolicContext(ContextTestCase):
    """These tests validate stable subsets, extended groups and cosets"""

    def test_stable_subsets(self):
        assert len(self.ctx.eps_stable_subsets()) == 4
        assert self.twisted.eps_stable_subsets() == [EMPTY, self.I]
        assert self.twisted.orbit_sign(self.I) == -1
        assert self.ctx.orbit_sign(self.I) == 1

    def test_groups(self):
        assert self.ctx.top_group.order == 6
        assert self.twisted.top_group.order == 12
        assert self.twisted.extended_group(EMPTY).order == 2
        assert len(self.twisted.coset(self.I)) == 6
        assert len(self.ctx.coset_classes(self.I)) == 3
        assert len(self.twisted.coset_classes(self.I)) == 3

    def test_fixed_elements(self):
        assert [str(w) for w in self.twisted.fixed_elements(self.I)] == ['e', 's1 s2 s1']
        assert len(self.ctx.fixed_elements(self.I)) == 6

    def test_association_classes(self):
        assert self.ctx.association_classes() == [(EMPTY,), (S1, S2), (self.I,)]

    def test_subset_errors(self):
        with pytest.raises(hc.SubsetError):
            self.twisted.check_subset(S1)
        with pytest.raises(hc.SubsetError):
            self.ctx.check_subset({5})
        with pytest.raises(hc.SubsetError):
            hc.hc_induce(self.ctx, S1, S2, self.ctx.trivial(S1))

    def test_irreducibles(self):
        assert len(self.ctx.irreducibles(self.I)) == 3
        for chi in self.twisted.irreducibles(self.I):
            assert self.twisted.inner_product(chi, chi) == 1


class TestDuality(ContextTestCase):
    """These tests validate the duality operator on coset class functions"""

    def test_trivial_goes_to_sign(self):
        ctx = self.ctx
        assert hc.duality(ctx, self.I, ctx.trivial(self.I)) == ctx.sign_character(self.I)
        sign, image = hc.duality_on_irreducible(ctx, ctx.trivial(self.I))
        assert sign == 1
        assert image == ctx.sign_character(self.I)

    def test_involution(self):
        for ctx in (self.ctx, self.twisted):
            for J in ctx.eps_stable_subsets():
                for phi in ctx.coset_basis(J):
                    assert hc.duality(ctx, J, hc.duality(ctx, J, phi)) == phi

    def test_irreducibles_map_to_irreducibles(self):
        for ctx in (self.ctx, self.twisted):
            for chi in ctx.irreducibles(self.I):
                sign, image = hc.duality_on_irreducible(ctx, chi)
                assert sign in (1, -1)
                assert ctx.inner_product(image, image) == 1

    def test_not_irreducible(self):
        with pytest.raises(hc.NotIrreducibleError):
            hc.duality_on_irreducible(self.ctx, self.ctx.trivial(self.I) * 2)

    def test_commutes_with_induction(self):
        ctx = self.ctx
        for phi in ctx.coset_basis(S1):
            lhs = hc.duality(ctx, self.I, hc.hc_induce(ctx, S1, self.I, phi))
            rhs = hc.hc_induce(ctx, S1, self.I, hc.duality(ctx, S1, phi))
            assert lhs == rhs


class TestMackey(ContextTestCase):
    """These tests validate the Mackey formula and the root counts m_u"""

    def test_formula(self):
        for ctx in (self.ctx, self.twisted):
            subsets = ctx.eps_stable_subsets()
            for K in subsets:
                for K2 in subsets:
                    for phi in ctx.coset_basis(K):
                        assert hc.mackey_lhs(ctx, K, K2, self.I, phi) == hc.mackey_rhs(ctx, K, K2, self.I, phi)

    def test_double_coset_terms(self):
        terms = hc.double_coset_terms(self.ctx, S1, S1, self.I)
        assert [(str(u), L, L2) for u, L, L2 in terms] == [('e', S1, S1), ('s2', EMPTY, EMPTY)]

    def test_m_u(self):
        a2 = self.a2
        assert hc.m_u(self.ctx, S1, S1, self.I, a2.identity) == 2
        assert hc.m_u(self.ctx, S1, S1, self.I, a2.from_word('s2')) == 0
        assert hc.m_u(self.ctx, S1, S2, self.I, a2.identity) == 1
        assert hc.m_u(self.ctx, EMPTY, EMPTY, self.I, a2.identity) == 3
        assert hc.m_u(self.ctx, self.I, self.I, self.I, a2.identity) == 0
        with pytest.raises(NotMinimalError):
            hc.m_u(self.ctx, S1, S1, self.I, a2.from_word('s1'))

    def test_root_count_pair(self):
        for u, _, _ in hc.double_coset_terms(self.ctx, S1, S2, self.I):
            first, second = hc.root_count_pair(self.ctx, S1, S2, self.I, u)
            assert first == second


class TestSignSum(ContextTestCase):
    """These tests validate the alternating sum over double cosets"""

    def test_rank_one(self):
        a1 = build_weyl('A', 1)
        ctx = hc.ParabolicContext(a1)
        assert hc.sign_sum(ctx, EMPTY, EMPTY, ctx.I) == 1
        assert hc.sign_sum(ctx, ctx.I, ctx.I, ctx.I) == -1

    def test_matches_orbit_sign(self):
        contexts = (self.ctx, self.twisted, hc.ParabolicContext(build_weyl('A', 3)))
        for ctx in contexts:
            J = ctx.I
            for K in ctx.eps_stable_subsets(J):
                for H in ctx.eps_stable_subsets(K):
                    assert hc.sign_sum(ctx, H, K, J) == ctx.orbit_sign(H)


class TestSeries(ContextTestCase):
    """These tests validate cuspidal functions and Harish-Chandra series"""

    def test_cuspidal_dimensions(self):
        assert len(hc.cuspidal_space(self.ctx, self.I)) == 1
        assert len(hc.cuspidal_space(self.ctx, S1)) == 1
        assert len(hc.cuspidal_space(self.ctx, EMPTY)) == 1
        b2 = hc.ParabolicContext(build_weyl('B', 2))
        assert len(hc.cuspidal_space(b2, b2.I)) == 2

    def test_series(self):
        blocks = hc.hc_series(self.ctx)
        assert [b.dimension for b in blocks] == [1, 1, 1]
        assert blocks[1].to_json() == {'subsets': [['s1'], ['s2']], 'dimension': 1}
        assert hc.series_checks(self.ctx) == {
            'orthogonal': True, 'dimension': 3, 'coset_classes': 3, 'complete': True,
        }
        assert all(entry['holds'] for entry in hc.series_sign(self.ctx))

    def test_b2_association_classes(self):
        b2 = hc.ParabolicContext(build_weyl('B', 2))
        assert len(b2.association_classes()) == 4
        assert hc.series_checks(b2)['complete']

    def test_span(self):
        ctx = self.ctx
        phi = ctx.trivial(self.I)
        assert hc.span_dimension(ctx, [phi, phi * 2, ctx.sign_character(self.I)]) == 2
        assert len(hc.induced_space(ctx, self.I)) == 2

    def test_span_over_cyclotomic_values(self):
        ctx = self.ctx
        zeta = Cyclotomic.root_of_unity(3)
        phi = ctx.from_values(self.I, [zeta, 1, 0])
        psi = ctx.from_values(self.I, [1, zeta.conjugate(), 0])
        chi = ctx.from_values(self.I, [0, 0, Fraction(1, 2)])
        assert hc.span_dimension(ctx, [phi, psi]) == 1
        assert hc.span_dimension(ctx, [phi, psi, chi]) == 2
        basis = hc.span_basis(ctx, self.I, [phi, chi])
        assert basis == [ctx.from_values(self.I, [1, zeta.conjugate(), 0]), ctx.from_values(self.I, [0, 0, 1])]


class TestSweeps(ContextTestCase):
    """These tests validate the duality, Mackey and sign identities over B3 and D4 with triality"""

    def setUp(self):
        super(TestSweeps, self).setUp()
        self.b3 = hc.ParabolicContext(build_weyl('B', 3))
        d4 = build_weyl('D', 4)
        self.triality = hc.ParabolicContext(d4, d4.named_automorphism('triality'))

    def test_triality_stable_subsets(self):
        labels = [sorted(s + 1 for s in J) for J in self.triality.eps_stable_subsets()]
        assert sorted(labels) == [[], [1, 2, 3, 4], [1, 3, 4], [2]]
        assert self.triality.top_group.order == 576

    def test_duality_involution(self):
        for ctx in (self.b3, self.triality):
            for J in ctx.eps_stable_subsets():
                for phi in ctx.coset_basis(J):
                    assert hc.duality(ctx, J, hc.duality(ctx, J, phi)) == phi

    def test_duality_on_irreducibles(self):
        for ctx in (self.b3, self.triality):
            for chi in ctx.irreducibles(ctx.I):
                sign, image = hc.duality_on_irreducible(ctx, chi)
                assert sign in (1, -1)
                assert ctx.inner_product(image, image) == 1
        sign_character = self.b3.sign_character(self.b3.I)
        for chi in self.b3.irreducibles(self.b3.I):
            twisted = hc.CosetClassFunction(self.b3.I, chi.function * sign_character.function)
            assert hc.duality(self.b3, self.b3.I, chi) == twisted

    def test_mackey(self):
        for ctx in (self.b3, self.triality):
            subsets = ctx.eps_stable_subsets()
            for K in subsets:
                for K2 in subsets:
                    for phi in ctx.coset_basis(K):
                        assert hc.mackey_lhs(ctx, K, K2, ctx.I, phi) == hc.mackey_rhs(ctx, K, K2, ctx.I, phi)
                    for u, _, _ in hc.double_coset_terms(ctx, K, K2, ctx.I):
                        assert hc.m_u(ctx, K, K2, ctx.I, u) >= 0

    def test_root_counts_b3(self):
        ctx = self.b3
        for J in ctx.eps_stable_subsets():
            for K in ctx.eps_stable_subsets(J):
                for K2 in ctx.eps_stable_subsets(J):
                    for u, _, _ in hc.double_coset_terms(ctx, K, K2, J):
                        first, second = hc.root_count_pair(ctx, K, K2, J, u)
                        assert first == second

    def test_sign_sums(self):
        for ctx in (self.b3, self.triality):
            for J in ctx.eps_stable_subsets():
                for K in ctx.eps_stable_subsets(J):
                    for H in ctx.eps_stable_subsets(K):
                        assert hc.sign_sum(ctx, H, K, J) == ctx.orbit_sign(H)

    def test_b3_series(self):
        checks = hc.series_checks(self.b3)
        assert checks['complete']
        assert checks['orthogonal']
        assert checks['dimension'] == 10
        report = hc.series_sign(self.b3)
        assert report
        assert all(entry['holds'] for entry in report)
