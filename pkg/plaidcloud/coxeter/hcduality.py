#!/usr/bin/env python
# coding=utf-8
"""
Harish-Chandra calculus on class functions of twisted parabolic cosets.

For an eps-stable subset J the extended group W_J<eps> is realized as the root permutations generated by the
simple reflections in J and the root permutation rho of eps. A coset class function on J is a class function of
that group supported on the coset W_J rho. Induction and restriction between such cosets model the functors
f_{K,J} and e_{K,J}; the duality operator, the Mackey formula and the Harish-Chandra series are built on top.

When eps is the identity everything reduces to ordinary class functions on W_J.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy.polys.matrices import DomainMatrix

from plaidcloud.coxeter.coxcore import NotMinimalError, compose, invert, subset_labels
from plaidcloud.coxeter.cyclotomic import Cyclotomic, common_conductor, cyclotomic_field, cyclotomic_sum
from plaidcloud.coxeter.functions import subsets
from plaidcloud.coxeter.grouptab import ClassFunction, FiniteGroup, GroupMismatchError, induce, restrict

__author__ = 'Paul Morel'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel', 'Pat Buxton']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class SubsetError(ValueError):
    """Raised for subsets that are not eps-stable, not nested as required, or not made of simple reflections."""


class NotIrreducibleError(ValueError):
    """Raised when a coset class function expected to be irreducible does not have unit norm."""


class CosetClassFunction:
    """A class function of W_J<eps> supported on the coset W_J rho."""

    __slots__ = ('J', 'function')

    def __init__(self, J, function):
        self.J = frozenset(J)
        self.function = function

    @property
    def group(self):
        return self.function.group

    def _check(self, other):
        if not isinstance(other, CosetClassFunction) or other.J != self.J or other.group is not self.group:
            raise GroupMismatchError(f'Coset class functions on {subset_labels(self.J)} and {other!r}')

    def __add__(self, other):
        self._check(other)
        return CosetClassFunction(self.J, self.function + other.function)

    def __sub__(self, other):
        self._check(other)
        return CosetClassFunction(self.J, self.function - other.function)

    def __neg__(self):
        return CosetClassFunction(self.J, -self.function)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction, Cyclotomic)):
            return CosetClassFunction(self.J, self.function * scalar)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CosetClassFunction):
            return NotImplemented
        return self.J == other.J and self.function == other.function

    __hash__ = None

    def is_zero(self):
        return self.function.is_zero()

    def __repr__(self):
        return f'CosetClassFunction({subset_labels(self.J)}: {", ".join(str(v) for v in self.function.values)})'

    def to_json(self):
        return {'J': subset_labels(self.J), 'values': self.function.to_json()}


@dataclass(frozen=True)
class SeriesBlock:
    """One Harish-Chandra series: an association class of subsets and the span it induces."""
    subsets: tuple
    basis: tuple

    @property
    def dimension(self):
        return len(self.basis)

    def to_json(self):
        return {
            'subsets': [subset_labels(H) for H in self.subsets],
            'dimension': self.dimension,
        }


class ParabolicContext:
    """A crystallographic datum with a dynkin automorphism eps, and the extended groups of its eps-stable subsets.

    Args:
        datum (CoxeterDatum): The root datum
        eps (DiagramAut): A dynkin automorphism; the identity when omitted
    """

    def __init__(self, datum, eps=None):
        self.datum = datum
        self.eps = eps if eps is not None else datum.named_automorphism('id')
        if not datum.is_automorphism(self.eps):
            raise SubsetError(f'{self.eps} is not an automorphism of {datum.name}')
        self.rho = datum.root_permutation(self.eps)
        self.order = self.eps.order
        self._groups = {}
        self._cosets = {}

    def __repr__(self):
        return f'ParabolicContext({self.datum.name}, eps={self.eps})'

    @property
    def I(self):
        return frozenset(self.datum.simples)

    # Subsets

    def is_stable(self, J):
        return self.eps.apply(J) == frozenset(J)

    def check_subset(self, J, within=None):
        J = frozenset(J)
        if not J <= self.I:
            raise SubsetError(f'{sorted(J)} is not a set of simple reflections of {self.datum.name}')
        if not self.is_stable(J):
            raise SubsetError(f'{subset_labels(J)} is not stable under {self.eps}')
        if within is not None and not J <= frozenset(within):
            raise SubsetError(f'{subset_labels(J)} is not contained in {subset_labels(within)}')
        return J

    def eps_stable_subsets(self, J=None):
        J = self.I if J is None else frozenset(J)
        return [K for K in subsets(J) if self.is_stable(K)]

    def orbits(self, J):
        """J_eps, the eps-orbits on J."""
        return self.eps.orbits(J)

    def orbit_sign(self, J):
        return (-1) ** len(self.orbits(J))

    def fixed_elements(self, J):
        """W_J^eps."""
        rho_inv = invert(self.rho)
        return [
            w for w in self.datum.parabolic_elements(J)
            if compose(compose(self.rho, w.perm), rho_inv) == w.perm
        ]

    # Groups

    @cached_property
    def top_group(self):
        datum = self.datum
        generators = list(datum.simple_perms)
        if not self.eps.is_identity:
            generators.append(self.rho)
        return FiniteGroup.closure(
            f'W({datum.name})' + ('' if self.eps.is_identity else f'<{self.eps}>'),
            generators,
            compose,
            datum.identity_perm,
            invert,
            fingerprint=f'extended:{datum.name}:{datum.cartan}:{self.eps.node_map}',
        )

    def extended_group(self, J):
        """W_J<eps>, embedded in the extended group of I."""
        J = self.check_subset(J)
        if J == self.I:
            return self.top_group
        if J not in self._groups:
            generators = [self.datum.simple_perms[s] for s in sorted(J)]
            if not self.eps.is_identity:
                generators.append(self.rho)
            labels = ','.join(subset_labels(J))
            self._groups[J] = self.top_group.subgroup(
                f'W_{{{labels}}}' + ('' if self.eps.is_identity else f'<{self.eps}>'),
                generators,
                fingerprint=f'{self.top_group.fingerprint}|J={sorted(J)}',
            )
        return self._groups[J]

    def coset(self, J):
        """The elements of W_J rho."""
        J = self.check_subset(J)
        if J not in self._cosets:
            self._cosets[J] = frozenset(compose(w.perm, self.rho) for w in self.datum.parabolic_elements(J))
        return self._cosets[J]

    def coset_classes(self, J):
        """Indices of the classes of W_J<eps> lying in the coset (the coset is a union of classes)."""
        coset = self.coset(J)
        return [c.index for c in self.extended_group(J).classes if c.representative in coset]

    # Coset class functions

    def from_values(self, J, values):
        """Build a coset class function from its values on the coset classes, in coset class order."""
        J = self.check_subset(J)
        G = self.extended_group(J)
        full = [0] * len(G.classes)
        for index, value in zip(self.coset_classes(J), values):
            full[index] = value
        return CosetClassFunction(J, ClassFunction(G, full))

    def from_class_function(self, J, phi):
        """Truncate a class function of W_J<eps> to the coset."""
        J = self.check_subset(J)
        if phi.group is not self.extended_group(J):
            raise GroupMismatchError(f'{phi.group.name} is not the extended group of {subset_labels(J)}')
        keep = set(self.coset_classes(J))
        return CosetClassFunction(
            J, ClassFunction(phi.group, [v if i in keep else 0 for i, v in enumerate(phi.values)])
        )

    def coset_values(self, phi):
        return [phi.function.values[i] for i in self.coset_classes(phi.J)]

    def coset_basis(self, J):
        """Indicator functions of the coset classes."""
        n = len(self.coset_classes(J))
        return [self.from_values(J, [1 if i == j else 0 for j in range(n)]) for i in range(n)]

    def inner_product(self, phi, psi):
        """(phi, psi)_J = |W_J|^-1 sum over x in W_J rho of phi(x) conj(psi(x))."""
        phi._check(psi)
        G = phi.group
        total = cyclotomic_sum(
            phi.function.values[i] * psi.function.values[i].conjugate() * G.classes[i].size
            for i in self.coset_classes(phi.J)
        )
        return total / self.datum.parabolic_order(phi.J)

    def sign_character(self, J):
        n = self.datum.n_positive
        G = self.extended_group(J)
        return self.from_class_function(
            J, ClassFunction.from_callable(G, lambda perm: (-1) ** sum(1 for k in range(n) if perm[k] >= n))
        )

    def trivial(self, J):
        return self.from_values(J, [1] * len(self.coset_classes(J)))

    def irreducibles(self, J):
        """Coset restrictions of irreducible characters of W_J<eps> with unit norm over the coset."""
        J = self.check_subset(J)
        found = []
        for chi in self.extended_group(J).character_table():
            phi = self.from_class_function(J, chi)
            if self.inner_product(phi, phi) == 1:
                found.append(phi)
        return found

    def association_classes(self, J=None):
        """eps-stable subsets of J up to H ~ Ad(u)H for u in W_J^eps, ordered by their least member."""
        J = self.I if J is None else self.check_subset(J)
        candidates = self.eps_stable_subsets(J)
        fixed = self.fixed_elements(J)
        seen = set()
        classes = []
        for H in candidates:
            if H in seen:
                continue
            members = {H}
            for u in fixed:
                image = self.datum.ad_simple_subset(u, H)
                if image is not None:
                    members.add(image)
            seen.update(members)
            classes.append(tuple(sorted(members, key=lambda K: (len(K), sorted(K)))))
        return classes


def _pair(ctx, J, K):
    J = ctx.check_subset(J)
    K = ctx.check_subset(K, within=J)
    return J, K


def hc_induce(ctx, K, J, phi):
    """f_{K,J}: induction from W_K<eps> to W_J<eps>, truncated to the coset W_J rho.

    Raises:
        SubsetError: If K is not an eps-stable subset of the eps-stable J
    """
    J, K = _pair(ctx, J, K)
    if phi.J != K:
        raise SubsetError(f'Function lives on {subset_labels(phi.J)}, not {subset_labels(K)}')
    if K == J:
        return phi
    induced = induce(ctx.extended_group(K), phi.function, ctx.extended_group(J))
    return ctx.from_class_function(J, induced)


def hc_restrict(ctx, J, K, phi):
    """e_{K,J}: restriction from W_J<eps> to W_K<eps>."""
    J, K = _pair(ctx, J, K)
    if phi.J != J:
        raise SubsetError(f'Function lives on {subset_labels(phi.J)}, not {subset_labels(J)}')
    if K == J:
        return phi
    restricted = restrict(ctx.extended_group(J), phi.function, ctx.extended_group(K))
    return ctx.from_class_function(K, restricted)


def duality(ctx, J, phi):
    """Sum over eps-stable K in J of (-1)^|K_eps| f_{K,J} e_{K,J} phi."""
    J = ctx.check_subset(J)
    total = None
    for K in ctx.eps_stable_subsets(J):
        term = hc_induce(ctx, K, J, hc_restrict(ctx, J, K, phi)) * ctx.orbit_sign(K)
        total = term if total is None else total + term
    return total


def duality_on_irreducible(ctx, chi):
    """Write duality(chi) as sign times an irreducible coset class function.

    When both signs are possible (the scalars of the coset contain -1) the positive sign is reported.

    Raises:
        NotIrreducibleError: If chi does not have norm one, or its dual is not plus or minus an irreducible
    """
    if ctx.inner_product(chi, chi) != 1:
        raise NotIrreducibleError(f'{chi} does not have unit norm')
    image = duality(ctx, chi.J, chi)
    candidates = ctx.irreducibles(chi.J)
    for psi in candidates:
        if psi == image:
            return 1, psi
    for psi in candidates:
        if psi == -image:
            return -1, psi
    raise NotIrreducibleError(f'Dual of {chi} is not plus or minus an irreducible')


def double_coset_terms(ctx, K, K2, J):
    """u in ^K W^{K2} inside W_J^eps, with L = K cap Ad(u)K2 and L2 = K2 cap Ad(u^-1)K."""
    datum = ctx.datum
    terms = []
    for u in ctx.fixed_elements(J):
        if datum.is_min_left_coset_rep(u, K) and datum.is_min_right_coset_rep(u, K2):
            L = datum.conjugate_intersection(K, u, K2)
            L2 = datum.conjugate_intersection(K2, datum.inverse(u), K)
            terms.append((u, L, L2))
    return terms


def transport(ctx, u, L, L2, psi):
    """Phi_u: a coset function on L to one on L2 = Ad(u^-1)L, by (Phi_u psi)(x) = psi(u x u^-1)."""
    source = ctx.extended_group(L)
    target = ctx.extended_group(L2)
    coset = ctx.coset(L2)
    u_inv = invert(u.perm)
    values = []
    for c in target.classes:
        x = c.representative
        if x in coset:
            values.append(psi.function.values[source.class_of(compose(compose(u.perm, x), u_inv))])
        else:
            values.append(0)
    return CosetClassFunction(L2, ClassFunction(target, values))


def mackey_rhs(ctx, K, K2, J, phi):
    """Sum over u of f_{L2,K2} Phi_u e_{L,K} phi, equal to e_{K2,J} f_{K,J} phi."""
    J = ctx.check_subset(J)
    K = ctx.check_subset(K, within=J)
    K2 = ctx.check_subset(K2, within=J)
    total = None
    for u, L, L2 in double_coset_terms(ctx, K, K2, J):
        term = hc_induce(ctx, L2, K2, transport(ctx, u, L, L2, hc_restrict(ctx, K, L, phi)))
        total = term if total is None else total + term
    return total


def mackey_lhs(ctx, K, K2, J, phi):
    return hc_restrict(ctx, J, K2, hc_induce(ctx, K, J, phi))


def _unipotent_roots(datum, K):
    """Indices of the positive roots outside the parabolic subsystem of K."""
    return frozenset(range(datum.n_positive)) - datum.parabolic_roots(K)


def m_u(ctx, K, K2, J, u):
    """|(Phi+ \\ Phi_K+) cap u(Phi+ \\ Phi_K2+)| - |Phi+ \\ Phi_J+|.

    Raises:
        NotMinimalError: If u is not in W_J or not minimal in W_K u W_K2
    """
    datum = ctx.datum
    J, K, K2 = frozenset(J), frozenset(K), frozenset(K2)
    if not (K <= J and K2 <= J):
        raise SubsetError(f'{subset_labels(K)} and {subset_labels(K2)} must lie in {subset_labels(J)}')
    if not datum.in_parabolic(u, J):
        raise NotMinimalError(f'{u} is not in W_J for J={subset_labels(J)}')
    if not (datum.is_min_left_coset_rep(u, K) and datum.is_min_right_coset_rep(u, K2)):
        raise NotMinimalError(f'{u} is not minimal in its (W_K, W_K2) double coset')
    moved = {u.perm[k] for k in _unipotent_roots(datum, K2)}
    return len(_unipotent_roots(datum, K) & moved) - len(_unipotent_roots(datum, J))


def root_count_pair(ctx, K, K2, J, u):
    """a_P + a_R - (m_u + |Phi+ \\ Phi_J+|) for (K, K2) and for (K cap Ad(u)K2, K2 cap Ad(u^-1)K)."""
    datum = ctx.datum
    L = datum.conjugate_intersection(K, u, K2)
    L2 = datum.conjugate_intersection(K2, datum.inverse(u), K)
    top = len(_unipotent_roots(datum, J))

    def expression(A, B):
        return len(_unipotent_roots(datum, A)) + len(_unipotent_roots(datum, B)) - (m_u(ctx, A, B, J, u) + top)

    return expression(K, K2), expression(L, L2)


def sign_sum(ctx, H, K, J):
    """Sum of (-1)^|K2_eps| over eps-stable K2 in J and u in ^K W^K2 cap W_J^eps with K cap Ad(u)K2 = H."""
    J = ctx.check_subset(J)
    K = ctx.check_subset(K, within=J)
    H = ctx.check_subset(H, within=K)
    total = 0
    for K2 in ctx.eps_stable_subsets(J):
        for _, L, _ in double_coset_terms(ctx, K, K2, J):
            if L == H:
                total += ctx.orbit_sign(K2)
    return total


def cuspidal_space(ctx, J):
    """Basis of the coset functions whose restriction to every proper eps-stable H vanishes.

    A class of W_J<eps> in the coset survives when it meets no W_H rho for proper H.
    """
    J = ctx.check_subset(J)
    covered = set()
    for H in ctx.eps_stable_subsets(J):
        if H != J:
            covered |= ctx.coset(H)
    G = ctx.extended_group(J)
    basis = []
    classes = ctx.coset_classes(J)
    for position, index in enumerate(classes):
        if not any(x in covered for x in G.classes[index].members):
            basis.append(ctx.from_values(J, [1 if i == position else 0 for i in range(len(classes))]))
    return basis


def _value_matrix(ctx, functions):
    """Coset values as a DomainMatrix over the cyclotomic field holding all of them, and its conductor."""
    rows = [ctx.coset_values(phi) for phi in functions]
    n = common_conductor(v for row in rows for v in row)
    dom = cyclotomic_field(n)
    entries = [[v.to_field(n) for v in row] for row in rows]
    return DomainMatrix(entries, (len(rows), len(rows[0])), dom), n


def span_basis(ctx, J, functions):
    """An echelon basis of the span of coset functions."""
    if not functions:
        return []
    matrix, n = _value_matrix(ctx, functions)
    reduced, pivots = matrix.rref()
    return [
        ctx.from_values(J, [Cyclotomic.from_anp(n, x) for x in row])
        for row in reduced.to_list()[:len(pivots)]
    ]


def span_dimension(ctx, functions):
    return _value_matrix(ctx, functions)[0].rank() if functions else 0


def induced_space(ctx, J):
    """Span of f_{H,J} over proper eps-stable H and the coset classes of H."""
    J = ctx.check_subset(J)
    functions = []
    for H in ctx.eps_stable_subsets(J):
        if H != J:
            functions.extend(hc_induce(ctx, H, J, phi) for phi in ctx.coset_basis(H))
    return span_basis(ctx, J, functions)


def hc_series(ctx, J=None):
    """The Harish-Chandra series of the coset functions on J, one block per association class."""
    J = ctx.I if J is None else ctx.check_subset(J)
    blocks = []
    for association in ctx.association_classes(J):
        functions = []
        for H in association:
            functions.extend(hc_induce(ctx, H, J, phi) for phi in cuspidal_space(ctx, H))
        blocks.append(SeriesBlock(subsets=association, basis=tuple(span_basis(ctx, J, functions))))
    logger.debug('%r: series dimensions %s on %s', ctx, [b.dimension for b in blocks], subset_labels(J))
    return blocks


def series_checks(ctx, J=None):
    """Pairwise orthogonality of the series and whether their dimensions add up to the coset classes."""
    J = ctx.I if J is None else ctx.check_subset(J)
    blocks = hc_series(ctx, J)
    orthogonal = all(
        ctx.inner_product(x, y) == 0
        for i, a in enumerate(blocks) for b in blocks[i + 1:]
        for x in a.basis for y in b.basis
    )
    total = sum(b.dimension for b in blocks)
    return {
        'orthogonal': orthogonal,
        'dimension': total,
        'coset_classes': len(ctx.coset_classes(J)),
        'complete': total == len(ctx.coset_classes(J)),
    }


def series_sign(ctx, J=None):
    """Check that duality acts on the series of H as the scalar (-1)^|H_eps|, on every basis vector."""
    J = ctx.I if J is None else ctx.check_subset(J)
    report = []
    for block in hc_series(ctx, J):
        expected = ctx.orbit_sign(block.subsets[0])
        holds = all(duality(ctx, J, phi) == phi * expected for phi in block.basis)
        report.append({
            'subsets': [subset_labels(H) for H in block.subsets],
            'sign': expected,
            'holds': holds,
        })
    return report
