#!/usr/bin/env python
# coding=utf-8
"""
Reflection classes, affine data, subsystem groups W^(K), the group Omega and extensions of Weyl groups.

The affine node is written ``ω`` and has index ``rank``. Omega is computed at root level: sigma is in Omega when a
single w in W carries the extended root of every node x to the extended root of sigma(x). The reflection level
variant (conjugating pi(x) to pi(sigma(x))) is kept as a diagnostic.

Extended groups are explicit: W^(K) x C x <c> as triples with the twisted product, metacyclic groups W'<a, c> as
pairs (w, a^i c^j), and diagram extensions W.Gamma directly as root permutation groups.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from plaidcloud.coxeter.config import get_setting
from plaidcloud.coxeter.coxcore import (
    DYNKIN, CoxeterDatum, DiagramAut, InvalidDatumError, compose, invert, simple_label,
)
from plaidcloud.coxeter.cyclotomic import Cyclotomic
from plaidcloud.coxeter.grouptab import FiniteGroup, GroupOrderError, restrict, weyl_group

__author__ = 'Paul Morel'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel', 'Adams Tower', 'Pat Buxton']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

OMEGA_LABEL = 'ω'
ROOT = 'root'
REFLECTION = 'reflection'


class ExtensionError(ValueError):
    """Raised when the data for an extended group violates one of its conditions."""


# Reflections

@dataclass(frozen=True)
class ReflectionSet:
    """Rf(W), keyed by positive root index, with its conjugacy classes.

    classes: tuples of positive root indices, in order of their least root
    class_factor: the irreducible factor of each class
    """
    datum: object
    roots: tuple
    classes: tuple
    class_factor: tuple

    def __len__(self):
        return len(self.roots)

    def reflection(self, k):
        return self.datum.reflection(k)

    def class_of(self, k):
        for index, members in enumerate(self.classes):
            if k in members:
                return index
        raise KeyError(k)

    def to_json(self):
        return {
            'count': len(self.roots),
            'classes': [
                {'factor': factor, 'size': len(members), 'norm': self.datum.root_norm(members[0])}
                for members, factor in zip(self.classes, self.class_factor)
            ],
        }


def _line(datum, k):
    return k if datum.is_positive(k) else datum.negate(k)


def _line_orbits(datum, lines, perms):
    """Orbits of root lines under a list of root permutations."""
    remaining = set(lines)
    orbits = []
    for start in sorted(lines):
        if start not in remaining:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            following = []
            for k in frontier:
                for perm in perms:
                    image = _line(datum, perm[k])
                    if image not in orbit:
                        orbit.add(image)
                        following.append(image)
            frontier = following
        remaining -= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


def reflections_and_classes(datum):
    """All reflections of W and their conjugacy classes, as orbits of root lines.

    Examples:
        >>> from plaidcloud.coxeter.coxcore import build_weyl
        >>> [len(c) for c in reflections_and_classes(build_weyl('B', 2)).classes]
        [2, 2]
    """
    positives = tuple(range(datum.n_positive))
    classes = _line_orbits(datum, positives, datum.simple_perms)
    return ReflectionSet(
        datum=datum,
        roots=positives,
        classes=tuple(classes),
        class_factor=tuple(datum.component_of_root(members[0]) for members in classes),
    )


@dataclass(frozen=True)
class SpecialSubset:
    """One reflection class per irreducible factor."""
    class_indices: tuple
    roots: frozenset

    def __contains__(self, k):
        return k in self.roots

    def to_json(self):
        return {'classes': list(self.class_indices), 'size': len(self.roots)}


def special_subsets(datum):
    reflections = reflections_and_classes(datum)
    per_factor = [
        [i for i, factor in enumerate(reflections.class_factor) if factor == f]
        for f in range(len(datum.factors))
    ]
    found = []
    for choice in itertools.product(*per_factor):
        roots = frozenset(k for i in choice for k in reflections.classes[i])
        found.append(SpecialSubset(class_indices=tuple(choice), roots=roots))
    return found


def special_subset_by_length(datum, kind):
    """The special subset of an irreducible datum picked by ``long``, ``short`` or a class index."""
    choices = special_subsets(datum)
    if kind in (None, ''):
        return choices[0]
    if str(kind).isdigit():
        return choices[int(kind)]
    norms = [datum.root_norm(min(X.roots)) for X in choices]
    target = max(norms) if kind == 'long' else min(norms) if kind == 'short' else None
    if target is None:
        raise ExtensionError(f'Unknown reflection class {kind!r}; use long, short or an index')
    return choices[norms.index(target)]


# Affine data

@dataclass(frozen=True)
class AffineDatum:
    """I plus the node ω, with pi(ω) the reflection in the highest root of the length of X."""
    datum: object
    special: SpecialSubset
    highest: int
    pi: tuple
    extended_roots: tuple

    @property
    def omega(self):
        return len(self.datum.simples)

    @property
    def nodes(self):
        return tuple(range(len(self.datum.simples) + 1))

    def label(self, x):
        return OMEGA_LABEL if x == self.omega else simple_label(x)

    def labels(self, K):
        return [self.label(x) for x in sorted(K)]

    def parse_nodes(self, text):
        if isinstance(text, str):
            tokens = text.replace(',', ' ').replace('{', ' ').replace('}', ' ').split()
        else:
            tokens = [str(t) for t in text]
        nodes = set()
        for token in tokens:
            if token in (OMEGA_LABEL, 'w', 'omega'):
                nodes.add(self.omega)
            else:
                number = token[1:] if token.startswith('s') else token
                if not number.isdigit() or not 1 <= int(number) <= self.omega:
                    raise ExtensionError(f'Not a node of the affine diagram: {token!r}')
                nodes.add(int(number) - 1)
        return frozenset(nodes)

    def root_vector(self, x):
        return self.datum.roots[self.extended_roots[x]]

    def to_json(self):
        return {
            'type': self.datum.name,
            'special': self.special.to_json(),
            'pi_omega': self.pi[self.omega].to_json(),
            'pi_omega_length': self.datum.length(self.pi[self.omega]),
        }


def affine_datum(datum, X=None):
    """Raises:
        InvalidDatumError: If the datum is reducible or the maximal length reflection of X is not unique
    """
    if not datum.is_irreducible:
        raise InvalidDatumError(f'{datum.name} is not irreducible')
    X = X if X is not None else special_subsets(datum)[0]
    norm = datum.root_norm(min(X.roots))
    highest = datum.highest_root(norm=norm)
    lengths = {k: datum.length(datum.reflection(k)) for k in X.roots}
    top = max(lengths.values())
    longest = [k for k, length in lengths.items() if length == top]
    if longest != [highest]:
        raise InvalidDatumError(f'Maximal length reflection of X in {datum.name} is not the highest root reflection')
    pi = tuple(datum.simple(s) for s in datum.simples) + (datum.reflection(highest),)
    extended = tuple(datum.simples) + (datum.negate(highest),)
    return AffineDatum(datum=datum, special=X, highest=highest, pi=pi, extended_roots=extended)


@dataclass
class Subsystem:
    """W^(K) as a subgroup of W, with its factorization and X^K."""
    affine: AffineDatum
    K: frozenset
    nodes: tuple
    group: FiniteGroup
    cartan_datum: CoxeterDatum
    factors: list
    reflections: frozenset
    special: frozenset

    @property
    def name(self):
        return self.cartan_datum.name

    def to_json(self):
        return {
            'K': self.affine.labels(self.K),
            'type': self.cartan_datum.name,
            'order': self.group.order,
            'factors': [
                {'type': f'{series}{rank}', 'nodes': self.affine.labels(nodes)} for series, rank, nodes in self.factors
            ],
            'reflections': len(self.reflections),
            'special': len(self.special),
        }


def subsystem(aff, K, W=None):
    """W^(K) generated by pi(K) for K a proper subset of the affine nodes.

    Raises:
        ExtensionError: If K is the whole affine node set
    """
    K = frozenset(K)
    datum = aff.datum
    if K == frozenset(aff.nodes):
        raise ExtensionError('K must be a proper subset of the affine nodes')
    nodes = tuple(sorted(K))
    W = W if W is not None else weyl_group(datum)
    generators = [aff.pi[x].perm for x in nodes]
    group = W.subgroup(f'W^({",".join(aff.labels(K))})', generators)
    vectors = [aff.root_vector(x) for x in nodes]
    cartan = [
        [
            Fraction(2 * datum.bilinear(vectors[i], vectors[j]), datum.bilinear(vectors[i], vectors[i]))
            for j in range(len(nodes))
        ]
        for i in range(len(nodes))
    ]
    if any(entry.denominator != 1 for row in cartan for entry in row):
        raise ExtensionError(f'Subsystem on {aff.labels(K)} is not crystallographic')
    cartan_datum = CoxeterDatum.from_cartan([[int(entry) for entry in row] for row in cartan])
    factors = []
    reflections = set()
    special = set()
    for series, rank, positions in cartan_datum.factors:
        members = frozenset(nodes[p] for p in positions)
        factors.append((series, rank, members))
        lines = {_line(datum, aff.extended_roots[x]) for x in members}
        perms = [aff.pi[x].perm for x in members]
        factor_lines = set(lines)
        frontier = list(lines)
        while frontier:
            following = []
            for k in frontier:
                for perm in perms:
                    image = _line(datum, perm[k])
                    if image not in factor_lines:
                        factor_lines.add(image)
                        following.append(image)
            frontier = following
        classes = _line_orbits(datum, factor_lines, perms)
        reflections |= factor_lines
        special |= factor_lines if len(classes) == 1 else factor_lines & aff.special.roots
    return Subsystem(
        affine=aff, K=K, nodes=nodes, group=group, cartan_datum=cartan_datum, factors=factors,
        reflections=frozenset(reflections), special=frozenset(special),
    )


# Omega

@dataclass
class Omega:
    """Permutations of the affine nodes with a realizing element of W for each."""
    affine: AffineDatum
    level: str
    elements: list = field(default_factory=list)

    @property
    def order(self):
        return len(self.elements)

    @property
    def permutations(self):
        return [sigma for sigma, _ in self.elements]

    def realizer(self, sigma):
        for candidate, w in self.elements:
            if candidate == sigma:
                return w
        raise KeyError(sigma)

    def element_order(self, sigma):
        n = 1
        current = sigma
        while any(i != x for i, x in enumerate(current)):
            current = compose(sigma, current)
            n += 1
        return n

    @property
    def is_cyclic(self):
        return any(self.element_order(sigma) == self.order for sigma in self.permutations)

    @property
    def is_klein(self):
        return self.order == 4 and not self.is_cyclic

    @property
    def shape(self):
        if self.is_cyclic:
            return f'Z/{self.order}'
        if self.is_klein:
            return 'Z/2 x Z/2'
        return f'order {self.order}'

    def stabilizer(self, K):
        """Omega^K, the sigma with sigma(K) = K."""
        K = frozenset(K)
        return [sigma for sigma in self.permutations if frozenset(sigma[x] for x in K) == K]

    def to_json(self):
        return {
            'level': self.level,
            'order': self.order,
            'shape': self.shape,
            'elements': [
                {'sigma': [self.affine.label(x) for x in sigma], 'w': w.to_json()} for sigma, w in self.elements
            ],
        }


def omega(aff, level=ROOT):
    """Omega by exhaustive search over W.

    Examples:
        >>> from plaidcloud.coxeter.coxcore import build_weyl
        >>> omega(affine_datum(build_weyl('A', 2))).order
        3
    """
    datum = aff.datum
    if level == ROOT:
        position = {k: x for x, k in enumerate(aff.extended_roots)}
        found = {}
        order = []
        for w in datum.elements():
            images = [w.perm[k] for k in aff.extended_roots]
            if all(k in position for k in images):
                sigma = tuple(position[k] for k in images)
                if sigma in found:
                    raise ExtensionError(f'{sigma} is realized twice in {datum.name}')
                found[sigma] = w
                order.append(sigma)
        return Omega(affine=aff, level=level, elements=[(sigma, found[sigma]) for sigma in order])
    if level == REFLECTION:
        lines = [_line(datum, k) for k in aff.extended_roots]
        nodes_on = {}
        for x, line in enumerate(lines):
            nodes_on.setdefault(line, []).append(x)
        found = {}
        order = []
        for w in datum.elements():
            images = [_line(datum, w.perm[line]) for line in lines]
            if not all(line in nodes_on for line in images):
                continue
            for sigma in itertools.product(*(nodes_on[line] for line in images)):
                if len(set(sigma)) == len(sigma) and sigma not in found:
                    found[sigma] = w
                    order.append(sigma)
        return Omega(affine=aff, level=level, elements=[(sigma, found[sigma]) for sigma in order])
    raise ValueError(f'Unknown Omega level {level!r}')


def omega_k(aff, K, level=ROOT):
    return omega(aff, level).stabilizer(K)


def extend_automorphism(aff, c):
    """c on the affine nodes, fixing ω.

    Raises:
        ExtensionError: If c is not a dynkin automorphism preserving X
    """
    datum = aff.datum
    if c.level != DYNKIN or not datum.is_automorphism(c):
        raise ExtensionError(f'{c} is not a dynkin automorphism of {datum.name}')
    rho = datum.root_permutation(c)
    if {_line(datum, rho[k]) for k in aff.special.roots} != set(aff.special.roots):
        raise ExtensionError(f'{c} does not preserve the special subset')
    return tuple(c.node_map) + (aff.omega,)


def act_on_omega(c_nodes, sigma):
    """c(sigma) = c sigma c^-1."""
    return compose(compose(c_nodes, sigma), invert(c_nodes))


def omega_trichotomy(aff, c):
    """Classify Omega with the c-action: (i) cyclic and fixed, (ii) cyclic and inverted, (iii) Klein four."""
    om = omega(aff, ROOT)
    c_nodes = extend_automorphism(aff, c)
    if om.is_klein:
        case = 'iii'
    elif not om.is_cyclic:
        case = None
    elif all(act_on_omega(c_nodes, sigma) == sigma for sigma in om.permutations):
        case = 'i'
    elif all(act_on_omega(c_nodes, sigma) == invert(sigma) for sigma in om.permutations):
        case = 'ii'
    else:
        case = None
    return {'type': aff.datum.name, 'order': om.order, 'shape': om.shape, 'c': str(c), 'case': case}


# Extensions

@dataclass
class ExtendedGroup:
    """A finite group containing a base group as a normal subgroup, with coset representatives gamma."""
    name: str
    group: FiniteGroup
    base: FiniteGroup
    gammas: list
    in_scope: bool = True

    def coset(self, gamma):
        # base elements are elements of the extended group already
        return [self.group.mul(w, gamma) for w in self.base.elements]

    def to_json(self):
        return {
            'name': self.name,
            'order': self.group.order,
            'base_order': self.base.order,
            'cosets': [label for label, _ in self.gammas],
            'in_scope': self.in_scope,
        }


def _conj(p, x):
    return compose(compose(p, x), invert(p))


def _perm_power(p, n):
    result = tuple(range(len(p)))
    for _ in range(n):
        result = compose(p, result)
    return result


def _is_metacyclic(elements, mul, identity):
    """Some cyclic subgroup is normal with a cyclic quotient."""
    elements = list(elements)
    order = len(elements)

    def cyclic(g):
        generated = [identity]
        x = g
        while x != identity:
            generated.append(x)
            x = mul(x, g)
        return generated

    inverses = {x: next(y for y in elements if mul(x, y) == identity) for x in elements}
    for a in elements:
        A = set(cyclic(a))
        if any(mul(mul(g, a), inverses[g]) not in A for g in elements):
            continue
        for b in elements:
            covered = set()
            for power in cyclic(b):
                covered.update(mul(x, power) for x in A)
            if len(covered) == order:
                return True
    return False


def _check_order(order, name):
    bound = get_setting('extension_order_bound', 2500)
    if order > bound:
        raise GroupOrderError(f'{name} would have order {order}, above the bound {bound}', order)


def _check_group_laws(group):
    """(x y) g = x (y g) for all x, y and every generator g, which gives associativity for all triples."""
    elements = group.elements
    for g in group.generators:
        for x in elements:
            for y in elements:
                if group.mul(group.mul(x, y), g) != group.mul(x, group.mul(y, g)):
                    raise ExtensionError(f'Product of {group.name} is not associative at {x}, {y}, {g}')
    for x in elements:
        x_inv = group.inverse(x)
        if group.mul(x, x_inv) != group.identity or group.mul(x_inv, x) != group.identity:
            raise ExtensionError(f'Inverse fails in {group.name} at {x}')


def build_extension(sub, C, c, N):
    """W^(K) x C x <c> with (w, s, n)(w', s', n') = (w s(c^n(w')), s c^n(s'), n + n').

    Args:
        sub (Subsystem): W^(K) with its affine datum
        C (list): A subgroup of Omega^K, as node permutations
        c (DiagramAut): An automorphism of (W, I, X) with c(K) = K
        N (int): The order of the cyclic group <c>; the order of c must divide it

    Raises:
        ExtensionError: For c(K) != K, c^N != 1, c(C) != C or C not a subgroup of Omega^K
        GroupOrderError: If |W^(K)| |C| N exceeds the configured bound
    """
    aff = sub.affine
    datum = aff.datum
    om = omega(aff, ROOT)
    c_nodes = extend_automorphism(aff, c)
    K = sub.K
    if frozenset(c_nodes[x] for x in K) != K:
        raise ExtensionError(f'c does not preserve K = {aff.labels(K)}')
    if N < 1 or N % c.order:
        raise ExtensionError(f'c has order {c.order}, which does not divide N = {N}')
    C = [tuple(sigma) for sigma in C]
    identity_sigma = tuple(aff.nodes)
    if identity_sigma not in C:
        C = [identity_sigma] + C
    C = [identity_sigma] + [sigma for sigma in C if sigma != identity_sigma]
    allowed = set(om.stabilizer(K))
    for sigma in C:
        if sigma not in allowed:
            raise ExtensionError(f'{[aff.label(x) for x in sigma]} is not in Omega^K')
    members = set(C)
    if any(compose(x, y) not in members for x in C for y in C):
        raise ExtensionError('C is not closed under composition')
    if {act_on_omega(c_nodes, sigma) for sigma in C} != members:
        raise ExtensionError('c(C) != C')
    name = f'W^({",".join(aff.labels(K))}).(C{len(C)} x <{c}>_{N})'
    _check_order(sub.group.order * len(C) * N, name)

    rho = datum.root_permutation(c)
    rho_powers = [_perm_power(rho, n) for n in range(N)]
    realizers = {sigma: om.realizer(sigma).perm for sigma in C}
    c_node_powers = [_perm_power(c_nodes, n) for n in range(N)]

    def c_on_sigma(n, sigma):
        return act_on_omega(c_node_powers[n], sigma)

    def mul(x, y):
        w, sigma, n = x
        w2, sigma2, n2 = y
        twisted = _conj(realizers[sigma], _conj(rho_powers[n], w2))
        return compose(w, twisted), compose(sigma, c_on_sigma(n, sigma2)), (n + n2) % N

    def inverse(x):
        w, sigma, n = x
        back = (N - n) % N
        sigma_inv = invert(sigma)
        w_inv = _conj(rho_powers[back], _conj(realizers[sigma_inv], invert(w)))
        return w_inv, c_on_sigma(back, sigma_inv), back

    identity_w = datum.identity_perm
    elements = [(w, sigma, n) for n in range(N) for sigma in C for w in sub.group.elements]
    generators = [(g, identity_sigma, 0) for g in sub.group.generators]
    generators += [(identity_w, sigma, 0) for sigma in C[1:]]
    if N > 1:
        generators.append((identity_w, identity_sigma, 1))
    fingerprint = f'extension:{datum.name}:{datum.cartan}:{sorted(K)}:{sorted(C)}:{c.node_map}:{N}'
    group = FiniteGroup(name, elements, mul, inverse, generators, fingerprint=fingerprint)
    base = group.subgroup(f'W^({",".join(aff.labels(K))})', generators[:len(sub.group.generators)])
    _check_group_laws(group)
    gammas = [
        (f'{[aff.label(x) for x in sigma]}*c^{n}', (identity_w, sigma, n)) for n in range(N) for sigma in C
    ]
    gamma_elements = [(sigma, n) for n in range(N) for sigma in C]
    in_scope = _is_metacyclic(
        gamma_elements,
        lambda x, y: (compose(x[0], c_on_sigma(x[1], y[0])), (x[1] + y[1]) % N),
        (identity_sigma, 0),
    ) or len(sub.factors) <= 1
    logger.info('Built %s of order %d', name, group.order)
    return ExtendedGroup(name, group, base, gammas, in_scope)


def build_metacyclic(base, M, N, k, u, rho_a, rho_c):
    """W' x <a, c | a^M = 1, c^N = a^u, c a c^-1 = a^k>, a and c acting by conjugation with rho_a, rho_c.

    Elements are (w, (i, j)) for w a^i c^j, and a^i c^j a^i' c^j' = a^(i + i' k^j + u [j + j' >= N]) c^(j + j' mod N).

    Raises:
        ExtensionError: If k^N != 1 or u k != u mod M, or the actions do not satisfy the relations on W'
    """
    if M < 1 or N < 1:
        raise ExtensionError('M and N must be positive')
    if pow(k, N, M) != 1 % M:
        raise ExtensionError(f'k^N = {k}^{N} is not 1 mod {M}')
    if (u * k - u) % M:
        raise ExtensionError(f'u k = {u * k} is not u = {u} mod {M}')
    members = set(base.elements)

    def act(p, x):
        return _conj(p, x)

    for g in base.generators:
        if act(rho_a, g) not in members or act(rho_c, g) not in members:
            raise ExtensionError(f'The actions do not normalize {base.name}')
        if act(_perm_power(rho_a, M), g) != g:
            raise ExtensionError('a^M does not act trivially')
        if act(_perm_power(rho_c, N), g) != act(_perm_power(rho_a, u % M), g):
            raise ExtensionError('c^N does not act as a^u')
        if act(rho_c, act(rho_a, act(invert(rho_c), g))) != act(_perm_power(rho_a, k % M), g):
            raise ExtensionError('c a c^-1 does not act as a^k')
    name = f'{base.name}.<a,c|a^{M},c^{N}=a^{u},cac^-1=a^{k}>'
    _check_order(base.order * M * N, name)
    a_powers = [_perm_power(rho_a, i) for i in range(M)]
    c_powers = [_perm_power(rho_c, j) for j in range(N)]
    k_powers = [pow(k, j, M) for j in range(N)]

    def gamma_mul(x, y):
        i, j = x
        i2, j2 = y
        carry = u if j + j2 >= N else 0
        return (i + i2 * k_powers[j] + carry) % M, (j + j2) % N

    def gamma_act(g, w):
        i, j = g
        return _conj(a_powers[i], _conj(c_powers[j], w))

    gamma_elements = [(i, j) for j in range(N) for i in range(M)]
    gamma_inverse = {g: next(h for h in gamma_elements if gamma_mul(g, h) == (0, 0)) for g in gamma_elements}

    def mul(x, y):
        return compose(x[0], gamma_act(x[1], y[0])), gamma_mul(x[1], y[1])

    def inverse(x):
        g_inv = gamma_inverse[x[1]]
        return gamma_act(g_inv, invert(x[0])), g_inv

    identity_w = base.identity
    elements = [(w, g) for g in gamma_elements for w in base.elements]
    generators = [(g, (0, 0)) for g in base.generators] + [(identity_w, (1 % M, 0)), (identity_w, (0, 1 % N))]
    group = FiniteGroup(
        name, elements, mul, inverse, generators,
        fingerprint=f'metacyclic:{base.fingerprint or base.name}:{sorted(base.generators)}:{M}:{N}:{k}:{u}:{rho_a}:{rho_c}',
    )
    base_group = group.subgroup(base.name, generators[:len(base.generators)])
    _check_group_laws(group)
    gammas = [(f'a^{i}c^{j}', (identity_w, (i, j))) for i, j in gamma_elements]
    return ExtendedGroup(name, group, base_group, gammas, True)


def metacyclic_relations_hold(ext, M, N, k, u):
    group = ext.group
    identity_w = group.identity[0]
    a = (identity_w, (1 % M, 0))
    c = (identity_w, (0, 1 % N))
    a_k = group.power(a, k % M)
    return (
        group.power(a, M) == group.identity
        and group.power(c, N) == group.power(a, u % M)
        and group.mul(group.mul(c, a), group.inverse(c)) == a_k
    )


def diagram_extension(datum, auts):
    """W.Gamma for the group Gamma generated by dynkin automorphisms, as a group of root permutations."""
    rhos = [datum.root_permutation(eps) for eps in auts]
    node_maps = FiniteGroup.closure(
        'Gamma', [eps.node_map for eps in auts], compose, tuple(datum.simples), invert
    )
    gamma_order = node_maps.order
    name = f'W({datum.name}).Gamma{gamma_order}'
    _check_order(datum.expected_order() * gamma_order, name)
    group = FiniteGroup.closure(
        name,
        list(datum.simple_perms) + rhos,
        compose,
        datum.identity_perm,
        invert,
        fingerprint=f'diagram:{datum.name}:{datum.cartan}:{sorted(eps.node_map for eps in auts)}',
    )
    base = group.subgroup(f'W({datum.name})', datum.simple_perms)
    gammas = [
        (str(DiagramAut(node_map, DYNKIN)), datum.root_permutation(DiagramAut(node_map, DYNKIN)))
        for node_map in node_maps.elements
    ]
    in_scope = datum.is_irreducible or _is_metacyclic(node_maps.elements, compose, tuple(datum.simples))
    return ExtendedGroup(name, group, base, gammas, in_scope)


def direct_product_extension(base, N):
    """W' x Z/N with trivial action."""
    identity = tuple(range(len(base.identity)))
    return build_metacyclic(base, 1, N, 1, 0, identity, identity)


# Certificates

def _candidate_roots(exponent):
    seen = []
    for sign in (1, -1):
        for j in range(exponent):
            zeta = Cyclotomic.root_of_unity(exponent, j) * sign
            if not any(zeta == other for _, _, other in seen):
                seen.append((sign, j, zeta))
    return seen


def quasirationality_certify(ext, gamma):
    """For each irreducible of the extended group, the roots of unity z with chi(w gamma) in z Z for all w in the base.

    Raises:
        GroupOrderError: If the group is beyond the character table bound
    """
    group = ext.group
    table = group.character_table()
    coset_classes = sorted({group.class_of(x) for x in ext.coset(gamma)})
    exponent = group.exponent
    candidates = _candidate_roots(exponent)
    certificates = []
    for index, chi in enumerate(table.irreducibles):
        values = [chi.values[t] for t in coset_classes]
        passing = []
        for sign, j, zeta in candidates:
            quotients = [value * zeta.conjugate() for value in values]
            if all(q.is_rational() and q.to_fraction().denominator == 1 for q in quotients):
                passing.append({'sign': sign, 'power': j, 'order': exponent})
        certificate = {'character': index, 'degree': table.degrees[index], 'ok': bool(passing), 'zeta': passing[:1]}
        certificate['all_zeta'] = passing
        if not passing:
            bad = next(
                (t for t in coset_classes if not (chi.values[t].is_rational()
                                                  and chi.values[t].to_fraction().denominator == 1)),
                coset_classes[0],
            )
            certificate['counterexample'] = {'class': bad, 'value': chi.values[bad].to_json()}
        certificates.append(certificate)
    return certificates


def certify_all_cosets(ext):
    report = []
    for label, gamma in ext.gammas:
        certificates = quasirationality_certify(ext, gamma)
        report.append({'gamma': label, 'ok': all(c['ok'] for c in certificates), 'certificates': certificates})
    return report


def invariant_extension_check(ext):
    """For each Gamma-invariant rational irreducible of the base, whether a rational irreducible of the extension
    restricts to it."""
    base = ext.base
    group = ext.group
    base_table = base.character_table()
    table = group.character_table()
    restrictions = [restrict(group, psi, base) for psi in table.irreducibles]
    report = []
    for index, chi in enumerate(base_table.irreducibles):
        if not chi.is_rational():
            continue
        invariant = all(
            chi.values[base.class_of(group.conjugate(gamma, x))] == chi.values[base.class_of(x)]
            for _, gamma in ext.gammas
            for x in (c.representative for c in base.classes)
        )
        if not invariant:
            continue
        extends = any(
            res == chi and psi.is_rational() for res, psi in zip(restrictions, table.irreducibles)
        )
        report.append({
            'character': index,
            'degree': base_table.degrees[index],
            'extends_rationally': extends,
            'in_scope': ext.in_scope,
        })
    return report
