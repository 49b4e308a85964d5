#!/usr/bin/env python
# coding=utf-8
"""
Finite crystallographic Coxeter groups.

Roots are integer vectors in the simple root basis. A group element is stored as the permutation it induces on
the root list, with one reduced word cached for display. The root list holds the positive roots sorted by height
(so simple root ``i`` has index ``i``) followed by their negatives in the same order.

Cartan convention: ``cartan[i][j] = <alpha_i^vee, alpha_j>``, so ``s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i``.
For type B the last node is the short one, for type C the last node is the long one.
"""

import logging
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from math import lcm, prod

from plaidcloud.coxeter.config import get_setting

__author__ = 'Paul Morel'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel', 'Adams Tower']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

DYNKIN = 'dynkin'
COXETER = 'coxeter'

MIN_RANK = {'A': 1, 'B': 1, 'C': 1, 'D': 4}
EXACT_RANKS = {'E': (6, 7, 8), 'F': (4,), 'G': (2,)}

DEGREES = {
    'E6': (2, 5, 6, 8, 9, 12),
    'E7': (2, 6, 8, 10, 12, 14, 18),
    'E8': (2, 8, 12, 14, 18, 20, 24, 30),
    'F4': (2, 6, 8, 12),
    'G2': (2, 6),
}

# Products A_ij * A_ji to the order of s_i s_j
BOND_ORDERS = {0: 2, 1: 3, 2: 4, 3: 6}

SimpleSubset = frozenset


class InvalidDatumError(ValueError):
    """Raised for (series, rank) pairs or Cartan matrices that are not finite crystallographic types."""


class NotMinimalError(ValueError):
    """Raised when an element was required to be a minimal coset representative and is not."""


def simple_label(i):
    """Display label of the simple reflection with index i.

    Examples:
        >>> simple_label(0)
        's1'
    """
    return f's{i + 1}'


def parse_label(text):
    """Index of a simple label such as ``s2`` (or a bare ``2``).

    Examples:
        >>> parse_label('s2')
        1
        >>> parse_label('3')
        2
    """
    text = text.strip()
    if text.startswith('s'):
        text = text[1:]
    if not text.isdigit() or int(text) < 1:
        raise ValueError(f'Not a simple reflection label: {text!r}')
    return int(text) - 1


def parse_subset(text):
    """Parse ``"s1 s3"``, ``"s1,s3"``, ``"{}"`` or ``""`` into a frozenset of indices.

    Examples:
        >>> sorted(parse_subset('s1, s3'))
        [0, 2]
        >>> parse_subset('')
        frozenset()
    """
    if isinstance(text, (list, tuple, set, frozenset)):
        return frozenset(parse_label(str(item)) for item in text)
    cleaned = text.replace(',', ' ').replace('{', ' ').replace('}', ' ').replace('∅', ' ')
    return frozenset(parse_label(token) for token in cleaned.split())


def parse_word(text):
    """Parse a whitespace separated word such as ``"s2 s1"``; ``"e"`` or ``""`` is the identity.

    Examples:
        >>> parse_word('s2 s1')
        (1, 0)
        >>> parse_word('e')
        ()
    """
    if isinstance(text, (list, tuple)):
        return tuple(parse_label(str(item)) for item in text)
    tokens = text.replace(',', ' ').split()
    if tokens in ([], ['e']):
        return ()
    return tuple(parse_label(token) for token in tokens)


def format_word(word):
    """Inverse of parse_word.

    Examples:
        >>> format_word((1, 0))
        's2 s1'
        >>> format_word(())
        'e'
    """
    if not word:
        return 'e'
    return ' '.join(simple_label(s) for s in word)


def subset_labels(J):
    return [simple_label(s) for s in sorted(J)]


def compose(p, q):
    """Permutation product (p q)(k) = p(q(k))."""
    return tuple(p[k] for k in q)


def invert(p):
    inverse = [0] * len(p)
    for k, image in enumerate(p):
        inverse[image] = k
    return tuple(inverse)


@dataclass(frozen=True)
class GroupElement:
    """An element of W as a root permutation. The cached word is display data and takes no part in equality."""
    perm: tuple
    word: tuple = field(default=(), compare=False, hash=False)

    def __str__(self):
        return format_word(self.word)

    def to_json(self):
        return format_word(self.word)


@dataclass(frozen=True)
class DiagramAut:
    """A bijection of the simple nodes preserving the Coxeter matrix, or the Cartan matrix at dynkin level."""
    node_map: tuple
    level: str = DYNKIN

    def __call__(self, s):
        return self.node_map[s]

    def apply(self, J):
        return frozenset(self.node_map[s] for s in J)

    @property
    def is_identity(self):
        return all(i == image for i, image in enumerate(self.node_map))

    @cached_property
    def order(self):
        current = self.node_map
        n = 1
        while any(i != image for i, image in enumerate(current)):
            current = compose(self.node_map, current)
            n += 1
        return n

    def compose(self, other):
        """self after other."""
        return DiagramAut(compose(self.node_map, other.node_map), self.level if self.level == other.level else COXETER)

    def inverse(self):
        return DiagramAut(invert(self.node_map), self.level)

    def power(self, n):
        result = DiagramAut(tuple(range(len(self.node_map))), self.level)
        for _ in range(n % self.order):
            result = self.compose(result)
        return result

    def orbits(self, J):
        """The eps-orbits on J, each as a sorted tuple, in order of their least member."""
        seen = set()
        orbits = []
        for s in sorted(J):
            if s in seen:
                continue
            orbit = [s]
            t = self.node_map[s]
            while t != s:
                orbit.append(t)
                t = self.node_map[t]
            seen.update(orbit)
            orbits.append(tuple(sorted(orbit)))
        return orbits

    def to_json(self):
        return {'node_map': [simple_label(s) for s in self.node_map], 'level': self.level}

    def __str__(self):
        if self.is_identity:
            return 'id'
        return ','.join(simple_label(s) for s in self.node_map)


def cartan_matrix(series, rank):
    """The Cartan matrix of an irreducible finite crystallographic type.

    Raises:
        InvalidDatumError: For pairs that do not name a finite crystallographic type

    Examples:
        >>> cartan_matrix('B', 2)
        ((2, -1), (-2, 2))
        >>> cartan_matrix('G', 2)
        ((2, -3), (-1, 2))
    """
    series = str(series).upper()
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InvalidDatumError(f'Invalid type {series}{rank}: rank must be an integer')
    if series in MIN_RANK:
        valid = rank >= MIN_RANK[series]
    elif series in EXACT_RANKS:
        valid = rank in EXACT_RANKS[series]
    else:
        valid = False
    if not valid:
        raise InvalidDatumError(f'Invalid type {series}{rank}: not a finite crystallographic Coxeter type')

    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, a_ij=-1, a_ji=-1):
        a[i][j] = a_ij
        a[j][i] = a_ji

    if series in 'ABC':
        for i in range(rank - 1):
            bond(i, i + 1)
        if series == 'B' and rank >= 2:
            bond(rank - 2, rank - 1, -1, -2)
        elif series == 'C' and rank >= 2:
            bond(rank - 2, rank - 1, -2, -1)
    elif series == 'D':
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif series == 'E':
        # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
        chain = [0, 2, 3] + list(range(4, rank))
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif series == 'F':
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif series == 'G':
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


def _components(cartan):
    rank = len(cartan)
    seen = set()
    components = []
    for start in range(rank):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        members = []
        while stack:
            i = stack.pop()
            members.append(i)
            for j in range(rank):
                if j != i and cartan[i][j] != 0 and j not in seen:
                    seen.add(j)
                    stack.append(j)
        components.append(tuple(sorted(members)))
    return components


def _symmetrizer(cartan):
    """Positive integers d with d_i A_ij = d_j A_ji, normalized so each component's shortest root has d = 1."""
    rank = len(cartan)
    d = [None] * rank
    for component in _components(cartan):
        d[component[0]] = Fraction(1)
        stack = [component[0]]
        while stack:
            i = stack.pop()
            for j in component:
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
        smallest = min(d[i] for i in component)
        for i in component:
            d[i] = d[i] / smallest
    scale = reduce(lcm, (x.denominator for x in d), 1)
    return tuple(int(x * scale) for x in d)


def classify_cartan(cartan):
    """Identify an irreducible Cartan matrix as (series, rank), or None when it is not of finite type.

    Examples:
        >>> classify_cartan(cartan_matrix('D', 4))
        ('D', 4)
        >>> classify_cartan(cartan_matrix('C', 3))
        ('C', 3)
        >>> classify_cartan(((2, -2), (-2, 2))) is None
        True
    """
    rank = len(cartan)
    if rank == 0 or len(_components(cartan)) != 1:
        return None
    if rank == 1:
        return ('A', 1)
    d = _symmetrizer(cartan)
    edges = {}
    for i in range(rank):
        for j in range(i + 1, rank):
            if cartan[i][j] != 0 or cartan[j][i] != 0:
                product = cartan[i][j] * cartan[j][i]
                if product not in (1, 2, 3) or cartan[i][j] == 0 or cartan[j][i] == 0:
                    return None
                edges[(i, j)] = product
    if len(edges) != rank - 1:
        return None
    degree = [0] * rank
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1
    multiple = [edge for edge, product in edges.items() if product > 1]
    if len(multiple) > 1 or max(degree) > 3:
        return None
    if multiple:
        i, j = multiple[0]
        product = edges[(i, j)]
        if max(degree) > 2:
            return None
        if product == 3:
            return ('G', 2) if rank == 2 else None
        if rank == 2:
            return ('B', 2)
        if degree[i] == 1 or degree[j] == 1:
            leaf, inner = (i, j) if degree[i] == 1 else (j, i)
            return ('B', rank) if d[leaf] < d[inner] else ('C', rank)
        return ('F', 4) if rank == 4 else None
    branch = [i for i in range(rank) if degree[i] == 3]
    if not branch:
        return ('A', rank)
    if len(branch) > 1:
        return None
    centre = branch[0]
    arms = []
    for start in (j for j in range(rank) if (min(centre, j), max(centre, j)) in edges):
        length, previous, current = 1, centre, start
        while True:
            nxt = [k for k in range(rank) if k not in (previous, current)
                   and (min(current, k), max(current, k)) in edges]
            if not nxt:
                break
            previous, current = current, nxt[0]
            length += 1
        arms.append(length)
    arms = tuple(sorted(arms))
    if arms[0] == 1 and arms[1] == 1:
        return ('D', rank)
    if arms in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        return ('E', rank)
    return None


class CoxeterDatum:
    """A root system with its Weyl group realized as root permutations."""

    def __init__(self, cartan, series, rank=None):
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.rank = len(self.cartan) if rank is None else rank
        self.series = series
        self.simples = tuple(range(len(self.cartan)))
        self.labels = tuple(simple_label(s) for s in self.simples)
        self.factors = []
        for component in _components(self.cartan):
            sub = tuple(tuple(self.cartan[i][j] for j in component) for i in component)
            kind = classify_cartan(sub)
            if kind is None:
                raise InvalidDatumError(f'Cartan matrix {self.cartan} is not of finite crystallographic type')
            self.factors.append((kind[0], kind[1], component))
        self.symmetrizer = _symmetrizer(self.cartan) if self.cartan else ()
        self.coxeter_matrix = tuple(
            tuple(1 if i == j else BOND_ORDERS[self.cartan[i][j] * self.cartan[j][i]] for j in self.simples)
            for i in self.simples
        )
        self._build_roots()
        self._elements = None
        self._by_perm = None

    @classmethod
    def from_cartan(cls, cartan, label=None):
        cartan = tuple(tuple(row) for row in cartan)
        datum = cls(cartan, series=label or '')
        if not label:
            datum.series = 'x'.join(f'{series}{rank}' for series, rank, _ in datum.factors) or 'trivial'
        return datum

    @classmethod
    def trivial(cls):
        """The rank zero datum: no roots, one element."""
        return cls((), series='trivial', rank=0)

    def __repr__(self):
        return f'CoxeterDatum({self.name})'

    @property
    def name(self):
        if self.series in MIN_RANK or self.series in EXACT_RANKS:
            return f'{self.series}{self.rank}'
        return self.series

    @property
    def is_irreducible(self):
        return len(self.factors) == 1

    # Roots

    def _build_roots(self):
        rank = len(self.simples)
        simple_roots = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
        found = set(simple_roots)
        frontier = list(simple_roots)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in self.simples:
                    gamma = self._reflect_coords(i, beta)
                    if gamma not in found:
                        found.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        positives = sorted(
            (beta for beta in found if all(c >= 0 for c in beta)),
            key=lambda beta: (sum(beta), tuple(-c for c in beta)),
        )
        self.n_positive = len(positives)
        self.roots = tuple(positives) + tuple(tuple(-c for c in beta) for beta in positives)
        self.root_index = {beta: k for k, beta in enumerate(self.roots)}
        self.simple_perms = tuple(
            tuple(self.root_index[self._reflect_coords(i, beta)] for beta in self.roots)
            for i in self.simples
        )
        self.identity_perm = tuple(range(len(self.roots)))

    def _reflect_coords(self, i, beta):
        pairing = sum(beta[j] * self.cartan[i][j] for j in self.simples)
        return tuple(c - pairing if j == i else c for j, c in enumerate(beta))

    def negate(self, k):
        n = self.n_positive
        return k + n if k < n else k - n

    def is_positive(self, k):
        return k < self.n_positive

    def height(self, k):
        return sum(self.roots[k])

    def bilinear(self, beta, gamma):
        """The W-invariant form on coordinate vectors, (alpha_i, alpha_j) = d_i A_ij."""
        return sum(
            beta[i] * gamma[j] * self.symmetrizer[i] * self.cartan[i][j]
            for i in self.simples if beta[i]
            for j in self.simples if gamma[j]
        )

    def root_norm(self, k):
        return self.bilinear(self.roots[k], self.roots[k])

    def root_support(self, k):
        return frozenset(i for i, c in enumerate(self.roots[k]) if c)

    def component_of_root(self, k):
        support = self.root_support(k)
        for index, (_, _, nodes) in enumerate(self.factors):
            if support <= set(nodes):
                return index
        raise InvalidDatumError(f'Root {self.roots[k]} does not lie in a single component')

    def parabolic_roots(self, J):
        """Indices of the positive roots of the parabolic subsystem of J."""
        J = frozenset(J)
        return frozenset(k for k in range(self.n_positive) if self.root_support(k) <= J)

    def highest_root(self, norm=None, component=0):
        """The positive root of maximal height in a component, optionally restricted to one root length."""
        candidates = [
            k for k in range(self.n_positive)
            if self.component_of_root(k) == component and (norm is None or self.root_norm(k) == norm)
        ]
        best = max(candidates, key=self.height)
        tops = [k for k in candidates if self.height(k) == self.height(best)]
        if len(tops) != 1:
            raise InvalidDatumError(f'No unique highest root of norm {norm} in {self.name}')
        return best

    # Elements

    @property
    def identity(self):
        return GroupElement(self.identity_perm, ())

    def simple(self, s):
        return GroupElement(self.simple_perms[s], (s,))

    def length(self, w):
        """Number of positive roots sent to negative roots."""
        n = self.n_positive
        return sum(1 for k in range(n) if w.perm[k] >= n)

    def is_right_descent(self, w, s):
        return w.perm[s] >= self.n_positive

    def reduced_word(self, perm):
        """The canonical reduced word: its last letter is the smallest right descent, recursively."""
        n = self.n_positive
        word = []
        current = perm
        while True:
            descents = [s for s in self.simples if current[s] >= n]
            if not descents:
                break
            word.append(descents[0])
            current = compose(current, self.simple_perms[descents[0]])
        return tuple(reversed(word))

    def element(self, perm):
        """Wrap a root permutation, attaching its canonical reduced word."""
        perm = tuple(perm)
        if self._by_perm is not None and perm in self._by_perm:
            return self._by_perm[perm]
        return GroupElement(perm, self.reduced_word(perm))

    def multiply(self, *elements):
        perm = self.identity_perm
        for w in elements:
            perm = compose(perm, w.perm)
        return self.element(perm)

    def inverse(self, w):
        return self.element(invert(w.perm))

    def from_word(self, word):
        if isinstance(word, str):
            word = parse_word(word)
        perm = self.identity_perm
        for s in word:
            if s not in self.simples:
                raise InvalidDatumError(f'{simple_label(s)} is not a simple reflection of {self.name}')
            perm = compose(perm, self.simple_perms[s])
        return self.element(perm)

    def elements(self):
        """All elements, breadth first over reduced words with simples tried in label order."""
        if self._elements is None:
            n = self.n_positive
            identity = self.identity
            by_perm = {identity.perm: identity}
            ordered = [identity]
            level = [identity]
            while level:
                nxt = []
                for w in level:
                    for s in self.simples:
                        if w.perm[s] >= n:
                            continue
                        perm = compose(w.perm, self.simple_perms[s])
                        if perm in by_perm:
                            continue
                        t = min(i for i in self.simples if perm[i] >= n)
                        if t == s:
                            word = w.word + (s,)
                        else:
                            word = by_perm[compose(perm, self.simple_perms[t])].word + (t,)
                        element = GroupElement(perm, word)
                        by_perm[perm] = element
                        ordered.append(element)
                        nxt.append(element)
                level = nxt
            self._elements = tuple(ordered)
            self._by_perm = by_perm
            logger.debug('Enumerated %d elements of %s', len(ordered), self.name)
        return self._elements

    @property
    def order(self):
        return len(self.elements())

    def expected_order(self):
        """Product of the degrees of the factors, without enumerating."""
        total = 1
        for series, rank, _ in self.factors:
            if series == 'A':
                degrees = range(2, rank + 2)
            elif series in 'BC':
                degrees = range(2, 2 * rank + 1, 2)
            elif series == 'D':
                degrees = list(range(2, 2 * rank - 1, 2)) + [rank]
            else:
                degrees = DEGREES[f'{series}{rank}']
            total *= prod(degrees)
        return total

    def in_parabolic(self, w, J):
        return set(w.word) <= set(J)

    def parabolic_elements(self, J):
        J = frozenset(J)
        return tuple(w for w in self.elements() if set(w.word) <= J)

    def parabolic_order(self, J):
        return len(self.parabolic_elements(J))

    def longest_element(self, J=None):
        J = self.simples if J is None else sorted(J)
        w = self.identity
        while True:
            ascents = [s for s in J if not self.is_right_descent(w, s)]
            if not ascents:
                return w
            w = self.element(compose(w.perm, self.simple_perms[ascents[0]]))

    def reflection(self, k):
        """The reflection in the root with index k."""
        beta = self.roots[k]
        norm = self.bilinear(beta, beta)
        perm = []
        for gamma in self.roots:
            coefficient = 2 * self.bilinear(gamma, beta) // norm
            perm.append(self.root_index[tuple(g - coefficient * b for g, b in zip(gamma, beta))])
        return self.element(tuple(perm))

    def reflection_root(self, w):
        """The positive root whose reflection is w, or None when w is not a reflection."""
        for k in range(self.n_positive):
            if w.perm[k] == self.negate(k) and self.reflection(k).perm == w.perm:
                return k
        return None

    # Parabolic calculus

    def min_double_coset_rep(self, J, w, K):
        """The unique element of minimal length in W_J w W_K.

        Strips left descents in J and right descents in K until none remain.
        """
        J, K = sorted(J), sorted(K)
        perm = w.perm
        n = self.n_positive
        changed = True
        while changed:
            changed = False
            inverse = invert(perm)
            for s in J:
                if inverse[s] >= n:
                    perm = compose(self.simple_perms[s], perm)
                    changed = True
                    break
            if changed:
                continue
            for s in K:
                if perm[s] >= n:
                    perm = compose(perm, self.simple_perms[s])
                    changed = True
                    break
        return self.element(perm)

    def is_min_left_coset_rep(self, w, J):
        """w lies in ^J W: no left descent in J."""
        inverse = invert(w.perm)
        return all(inverse[s] < self.n_positive for s in J)

    def is_min_right_coset_rep(self, w, K):
        return all(w.perm[s] < self.n_positive for s in K)

    def coset_reps(self, J, K=None):
        """^J W, or ^J W^K when K is given, in enumeration order."""
        return tuple(
            w for w in self.elements()
            if self.is_min_left_coset_rep(w, J) and (K is None or self.is_min_right_coset_rep(w, K))
        )

    def ad_simple_subset(self, w, J):
        """Ad(w)J when every conjugate w s w^-1 is simple, else None."""
        rank = len(self.simples)
        n = self.n_positive
        image = set()
        for s in J:
            k = w.perm[s]
            if k < rank:
                image.add(k)
            elif n <= k < n + rank:
                image.add(k - n)
            else:
                return None
        return frozenset(image)

    def conjugate_intersection(self, K, u, K2):
        """K ∩ Ad(u)K2 read inside the reflection set: the s in K with u t u^-1 = s for some t in K2."""
        rank = len(self.simples)
        n = self.n_positive
        hits = set()
        for t in K2:
            k = u.perm[t]
            if k < rank:
                s = k
            elif n <= k < n + rank:
                s = k - n
            else:
                continue
            if s in K:
                hits.add(s)
        return frozenset(hits)

    # Diagram automorphisms

    def diagram_automorphisms(self, level=DYNKIN):
        """All node bijections preserving the Cartan matrix (dynkin) or the Coxeter matrix (coxeter)."""
        if level not in (DYNKIN, COXETER):
            raise ValueError(f'Unknown automorphism level {level!r}')
        matrix = self.cartan if level == DYNKIN else self.coxeter_matrix
        found = []
        for node_map in itertools.permutations(self.simples):
            if all(matrix[node_map[i]][node_map[j]] == matrix[i][j] for i in self.simples for j in self.simples):
                found.append(DiagramAut(tuple(node_map), level))
        return found

    def is_automorphism(self, eps):
        matrix = self.cartan if eps.level == DYNKIN else self.coxeter_matrix
        return (
            sorted(eps.node_map) == list(self.simples)
            and all(matrix[eps(i)][eps(j)] == matrix[i][j] for i in self.simples for j in self.simples)
        )

    def root_permutation(self, eps):
        """The permutation of roots induced by a dynkin automorphism."""
        if eps.level != DYNKIN or not self.is_automorphism(DiagramAut(eps.node_map, DYNKIN)):
            raise InvalidDatumError(f'{eps} does not preserve the Cartan matrix of {self.name}')
        perm = []
        for beta in self.roots:
            image = [0] * len(beta)
            for i, c in enumerate(beta):
                image[eps(i)] = c
            perm.append(self.root_index[tuple(image)])
        return tuple(perm)

    def apply_aut(self, eps, w):
        """eps(w), via conjugation by the root permutation at dynkin level and letterwise on words otherwise."""
        if eps.level == DYNKIN:
            rho = self.root_permutation(eps)
            return self.element(compose(compose(rho, w.perm), invert(rho)))
        return self.from_word(tuple(eps(s) for s in w.word))

    def named_automorphism(self, name):
        """``id``, ``flip`` (the order two symmetry) or ``triality``; explicit maps go through parse_automorphism."""
        autos = self.diagram_automorphisms(DYNKIN)
        if name in ('id', 'identity'):
            return autos[0]
        wanted = {'flip': 2, 'triality': 3}.get(name)
        for eps in autos:
            if eps.order == wanted:
                return eps
        raise InvalidDatumError(f'{self.name} has no {name} automorphism')

    def parse_automorphism(self, text, level=DYNKIN):
        """Named automorphism, or an explicit image list such as ``"s2 s1"`` giving eps(s1), eps(s2), ..."""
        text = text.strip()
        if text in ('id', 'identity', 'flip', 'triality'):
            return self.named_automorphism(text)
        node_map = parse_word(text)
        eps = DiagramAut(tuple(node_map), level)
        if len(node_map) != len(self.simples) or not self.is_automorphism(eps):
            raise InvalidDatumError(f'{text!r} is not a {level} automorphism of {self.name}')
        return eps


def build_weyl(series, rank):
    """Build the datum of an irreducible Weyl group.

    Args:
        series (str): One of A, B, C, D, E, F, G
        rank (int): The rank, at most the configured ``rank_bound``

    Returns:
        CoxeterDatum: The datum; elements are enumerated on demand

    Examples:
        >>> build_weyl('A', 2).order
        6
        >>> build_weyl('B', 2).n_positive
        4
    """
    series = str(series).upper()
    bound = get_setting('rank_bound', 6)
    if isinstance(rank, int) and rank > bound:
        raise InvalidDatumError(f'Invalid type {series}{rank}: rank exceeds the configured bound {bound}')
    return CoxeterDatum(cartan_matrix(series, rank), series, rank)


def product_datum(*data):
    """Direct product of data, with block diagonal Cartan matrix and simples numbered consecutively."""
    size = sum(len(datum.simples) for datum in data)
    cartan = [[0] * size for _ in range(size)]
    offset = 0
    for datum in data:
        for i, row in enumerate(datum.cartan):
            for j, value in enumerate(row):
                cartan[offset + i][offset + j] = value
        offset += len(datum.simples)
    return CoxeterDatum.from_cartan(cartan, 'x'.join(datum.name for datum in data))
