#!/usr/bin/env python
# coding=utf-8
"""
Explicit finite groups, conjugacy classes, class functions and character tables.

Groups are enumerated once in a canonical breadth first order. Everything else (class representatives,
class order, the order of irreducible characters) is derived from that order, so two runs produce identical
tables.
"""

import logging
from fractions import Fraction
from functools import cached_property
from math import lcm

from plaidcloud.coxeter.config import get_setting
from plaidcloud.coxeter.coxcore import compose, invert
from plaidcloud.coxeter.cyclotomic import Cyclotomic, cyclotomic_sum

__author__ = 'Paul Morel'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel', 'Adams Tower']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class GroupOrderError(ValueError):
    """Raised when a group is larger than the configured bound."""

    def __init__(self, message, order):
        super(GroupOrderError, self).__init__(message)
        self.order = order


class PrimeSearchError(ValueError):
    """Raised when the modular character table computation cannot be completed or fails its checks."""


class GroupMismatchError(ValueError):
    """Raised when class functions of different groups are combined, or a subgroup is not embedded."""


class ConjugacyClass:
    __slots__ = ('index', 'representative', 'members')

    def __init__(self, index, representative, members):
        self.index = index
        self.representative = representative
        self.members = members

    @property
    def size(self):
        return len(self.members)

    def __repr__(self):
        return f'ConjugacyClass({self.index}, size={self.size})'


class FiniteGroup:
    """A finite group given by an explicit element list and a multiplication.

    Args:
        name (str): Display name
        elements (iterable): All elements, identity first, in canonical order
        mul (callable): The product
        inverse (callable): The inverse
        generators (iterable): Generating elements, used for class orbits and subgroup tests
        parent (FiniteGroup, optional): The group this one is embedded in
        fingerprint (str, optional): Stable identity for the table cache. Groups without one are not cached.
    """

    def __init__(self, name, elements, mul, inverse, generators, parent=None, fingerprint=None):
        self.name = name
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.mul = mul
        self.inverse = inverse
        self.generators = tuple(generators)
        self.parent = parent
        self.fingerprint = fingerprint
        self._table = None

    @classmethod
    def closure(cls, name, generators, mul, identity, inverse, parent=None, fingerprint=None, bound=None):
        """Enumerate the group generated by generators, breadth first with generators tried in order.

        Raises:
            GroupOrderError: If more than bound elements turn up
        """
        generators = tuple(generators)
        ordered = [identity]
        seen = {identity}
        frontier = [identity]
        while frontier:
            following = []
            for x in frontier:
                for g in generators:
                    y = mul(x, g)
                    if y in seen:
                        continue
                    seen.add(y)
                    ordered.append(y)
                    following.append(y)
                    if bound is not None and len(ordered) > bound:
                        raise GroupOrderError(f'{name} has more than {bound} elements', len(ordered))
            frontier = following
        return cls(name, ordered, mul, inverse, generators, parent=parent, fingerprint=fingerprint)

    def __repr__(self):
        return f'FiniteGroup({self.name}, order={self.order})'

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return self.elements[0]

    def subgroup(self, name, generators, fingerprint=None):
        """The subgroup generated by generators, embedded in this group."""
        generators = tuple(generators)
        for g in generators:
            if g not in self.index:
                raise GroupMismatchError(f'Generator {g} of {name} is not an element of {self.name}')
        return FiniteGroup.closure(
            name, generators, self.mul, self.identity, self.inverse, parent=self, fingerprint=fingerprint
        )

    def contains_group(self, H):
        """H is this group, descends from it, or has all its generators here."""
        current = H
        while current is not None:
            if current is self:
                return True
            current = current.parent
        return all(g in self.index for g in H.generators) and H.mul is self.mul

    def conjugate(self, g, x):
        """g x g^-1"""
        return self.mul(self.mul(g, x), self.inverse(g))

    def power(self, x, n):
        result = self.identity
        for _ in range(n):
            result = self.mul(result, x)
        return result

    def element_order(self, x):
        n = 1
        y = x
        while y != self.identity:
            y = self.mul(y, x)
            n += 1
        return n

    @cached_property
    def exponent(self):
        return lcm(*(self.element_order(c.representative) for c in self.classes))

    # Classes

    @cached_property
    def classes(self):
        """Conjugacy classes ordered by their least member, identity class first.

        Raises:
            GroupOrderError: If the group exceeds the configured ``group_order_bound``
        """
        bound = get_setting('group_order_bound', 5000)
        if self.order > bound:
            raise GroupOrderError(f'{self.name} has order {self.order}, above the bound {bound}', self.order)
        movers = [(g, self.inverse(g)) for g in self.generators]
        class_of = {}
        found = []
        for x in self.elements:
            if x in class_of:
                continue
            members = {x}
            frontier = [x]
            while frontier:
                following = []
                for y in frontier:
                    for g, g_inv in movers:
                        z = self.mul(self.mul(g, y), g_inv)
                        if z not in members:
                            members.add(z)
                            following.append(z)
                frontier = following
            index = len(found)
            for y in members:
                class_of[y] = index
            found.append(ConjugacyClass(index, x, tuple(sorted(members, key=self.index.__getitem__))))
        self._class_of = class_of
        logger.debug('%s: %d classes', self.name, len(found))
        return tuple(found)

    def class_of(self, x):
        self.classes
        return self._class_of[x]

    @property
    def class_sizes(self):
        return [c.size for c in self.classes]

    def centralizer_order(self, x):
        return self.order // self.classes[self.class_of(x)].size

    @cached_property
    def inverse_classes(self):
        return tuple(self.class_of(self.inverse(c.representative)) for c in self.classes)

    def power_map(self, n):
        """Class index of x^n for each class."""
        return tuple(self.class_of(self.power(c.representative, n)) for c in self.classes)

    def character_table(self):
        if self._table is None:
            from plaidcloud.coxeter import cache, dixon

            table = cache.load_table(self)
            if table is None:
                table = dixon.compute_table(self)
                cache.store_table(table)
            self._table = table
        return self._table


def conjugacy_classes(G):
    return G.classes


def character_table(G):
    return G.character_table()


class ClassFunction:
    """A function on the conjugacy classes of a group, one cyclotomic value per class."""

    __slots__ = ('group', 'values')

    def __init__(self, group, values):
        values = tuple(Cyclotomic.coerce(v) for v in values)
        if len(values) != len(group.classes):
            raise GroupMismatchError(f'{len(values)} values for the {len(group.classes)} classes of {group.name}')
        self.group = group
        self.values = values

    @classmethod
    def from_callable(cls, group, fn):
        return cls(group, [fn(c.representative) for c in group.classes])

    @classmethod
    def zero(cls, group):
        return cls(group, [0] * len(group.classes))

    def __call__(self, x):
        return self.values[self.group.class_of(x)]

    def _check(self, other):
        if not isinstance(other, ClassFunction) or other.group is not self.group:
            raise GroupMismatchError(f'Class functions of {self.group.name} and {getattr(other, "group", other)}')

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return ClassFunction(self.group, [-a for a in self.values])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return ClassFunction(self.group, [a * other for a in self.values])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return other.group is self.group and all(a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def conjugate(self):
        return ClassFunction(self.group, [a.conjugate() for a in self.values])

    @property
    def degree(self):
        return self.values[0]

    def is_zero(self):
        return all(a.is_zero() for a in self.values)

    def is_rational(self):
        return all(a.is_rational() for a in self.values)

    def is_integral(self):
        return all(a.is_integral() for a in self.values)

    def norm(self):
        return inner_product(self, self)

    def is_character(self):
        """Non-negative integer multiplicities against the irreducible characters."""
        for m in self.group.character_table().decompose(self):
            if not m.is_rational() or m.to_fraction().denominator != 1 or m.to_fraction() < 0:
                return False
        return not self.is_zero()

    def sort_key(self):
        return tuple(tuple(-c for c in a.coords) for a in self.values)

    def __repr__(self):
        return f'ClassFunction({self.group.name}: {", ".join(str(a) for a in self.values)})'

    def to_json(self):
        return [a.to_json() for a in self.values]


def inner_product(phi, psi):
    """<phi, psi> = |G|^-1 sum_g phi(g) conj(psi(g)).

    Raises:
        GroupMismatchError: If phi and psi live on different groups
    """
    phi._check(psi)
    G = phi.group
    total = cyclotomic_sum(a * b.conjugate() * c.size for a, b, c in zip(phi.values, psi.values, G.classes))
    return total / G.order


def trivial(G):
    return ClassFunction(G, [1] * len(G.classes))


def regular(G):
    return ClassFunction(G, [G.order] + [0] * (len(G.classes) - 1))


def class_indicator(G, index):
    return ClassFunction(G, [1 if i == index else 0 for i in range(len(G.classes))])


def induce(H, phi, G):
    """Ind_H^G phi(g_t) = |G| / (|H| |C_t|) sum over h in H with h in C_t of phi(h).

    Raises:
        GroupMismatchError: If H is not embedded in G or phi is not a class function of H
    """
    if phi.group is not H:
        raise GroupMismatchError(f'Class function of {phi.group.name} induced from {H.name}')
    if not G.contains_group(H):
        raise GroupMismatchError(f'{H.name} is not embedded in {G.name}')
    sums = [Cyclotomic.zero() for _ in G.classes]
    for D, value in zip(H.classes, phi.values):
        t = G.class_of(D.representative)
        sums[t] = sums[t] + value * D.size
    return ClassFunction(
        G, [s * Fraction(G.order, H.order * C.size) for s, C in zip(sums, G.classes)]
    )


def restrict(G, phi, H):
    """Raises:
        GroupMismatchError: If H is not embedded in G
    """
    if phi.group is not G:
        raise GroupMismatchError(f'Class function of {phi.group.name} restricted from {G.name}')
    if not G.contains_group(H):
        raise GroupMismatchError(f'{H.name} is not embedded in {G.name}')
    return ClassFunction(H, [phi.values[G.class_of(D.representative)] for D in H.classes])


class CharacterTable:
    """Irreducible characters of a group, sorted by degree then values, the trivial character first."""

    def __init__(self, group, irreducibles, conductor):
        self.group = group
        self.conductor = conductor
        self.irreducibles = sorted(
            irreducibles,
            key=lambda chi: (chi.degree.to_fraction(), not all(a == 1 for a in chi.values), chi.sort_key()),
        )

    @property
    def classes(self):
        return self.group.classes

    @property
    def degrees(self):
        return [int(chi.degree.to_fraction()) for chi in self.irreducibles]

    def __len__(self):
        return len(self.irreducibles)

    def __iter__(self):
        return iter(self.irreducibles)

    def __getitem__(self, index):
        return self.irreducibles[index]

    def decompose(self, phi):
        return [inner_product(phi, chi) for chi in self.irreducibles]

    def index_of(self, phi):
        for i, chi in enumerate(self.irreducibles):
            if chi == phi:
                return i
        return None

    def check_orthogonality(self):
        """Both orthogonality relations and sum of squared degrees, exactly."""
        G = self.group
        k = len(G.classes)
        if len(self.irreducibles) != k:
            return False
        if sum(d * d for d in self.degrees) != G.order:
            return False
        for i, chi in enumerate(self.irreducibles):
            for j in range(i, k):
                if inner_product(chi, self.irreducibles[j]) != (1 if i == j else 0):
                    return False
        for s in range(k):
            for t in range(s, k):
                total = cyclotomic_sum(chi.values[s] * chi.values[t].conjugate() for chi in self.irreducibles)
                if total != (Fraction(G.order, G.classes[s].size) if s == t else 0):
                    return False
        return True

    def is_rational(self):
        return all(chi.is_rational() for chi in self.irreducibles)

    def to_json(self):
        return {
            'group': self.group.name,
            'order': self.group.order,
            'conductor': self.conductor,
            'class_sizes': self.group.class_sizes,
            'degrees': self.degrees,
            'characters': [chi.to_json() for chi in self.irreducibles],
        }


def weyl_group(datum):
    """W as a group of root permutations, in the enumeration order of the datum."""
    return FiniteGroup(
        f'W({datum.name})',
        [w.perm for w in datum.elements()],
        compose,
        invert,
        datum.simple_perms,
        fingerprint=f'weyl:{datum.name}:{datum.cartan}',
    )


def parabolic_subgroup(G, datum, J, name=None):
    J = sorted(J)
    label = ','.join(datum.labels[s] for s in J)
    return G.subgroup(name or f'W_{{{label}}}', [datum.simple_perms[s] for s in J])


def sign_character(G, datum):
    """(-1)^length on a group of root permutations of datum."""
    n = datum.n_positive
    return ClassFunction.from_callable(G, lambda perm: (-1) ** sum(1 for k in range(n) if perm[k] >= n))
