#!/usr/bin/env python
# coding=utf-8
"""
Exact character tables by the class algebra eigenvector method.

The class multiplication matrices are diagonalized simultaneously over GF(p) for a prime p = 1 mod exp(G)
large enough that every character value is determined by its residues. The residues are then lifted to
Z[zeta_e] through the Galois conjugates chi(g^a), one Vandermonde solve per class.
"""

import logging
from math import gcd, isqrt

from sympy import QQ, Poly, Symbol, nextprime, primitive_root, sqrt_mod
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyclasses import ANP

from plaidcloud.coxeter.cyclotomic import Cyclotomic, cyclotomic_field
from plaidcloud.coxeter.grouptab import CharacterTable, ClassFunction, PrimeSearchError

__author__ = 'Adams Tower'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Adams Tower', 'Paul Morel']
__license__ = 'Apache 2.0'
__maintainer__ = 'Adams Tower'
__email__ = 'adams.tower@tartansolutions.com'

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

MAX_PRIME_ATTEMPTS = 100000

_X = Symbol('x')


def dixon_prime(order, exponent, max_class_size):
    """The least prime p > 2 sqrt(|G|) max|C| with p = 1 mod exponent.

    Examples:
        >>> dixon_prime(6, 6, 3)
        19
    """
    p = 2 * (isqrt(order) + 1) * max_class_size
    for _ in range(MAX_PRIME_ATTEMPTS):
        p = nextprime(p)
        if p % exponent == 1:
            return int(p)
    raise PrimeSearchError(f'No prime = 1 mod {exponent} found above {2 * isqrt(order) * max_class_size}')


def class_matrices(G):
    """a[r][s][t] = #{x in C_r : x^-1 z_t in C_s}, with z_t the representative of class t."""
    k = len(G.classes)
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    reps = [c.representative for c in G.classes]
    for x in G.elements:
        r = G.class_of(x)
        x_inv = G.inverse(x)
        for t, z in enumerate(reps):
            a[r][G.class_of(G.mul(x_inv, z))][t] += 1
    return a


def _ints(dm, p):
    return [[int(v) % p for v in row] for row in dm.to_list()]


def _left_eigenspaces(R, field, p):
    """Bases, in reduced row echelon form, of {c : c R = z c} for each eigenvalue z in GF(p)."""
    d = len(R)
    transposed = [[R[j][i] for j in range(d)] for i in range(d)]
    charpoly = Poly(DomainMatrix.from_list(transposed, field).charpoly(), _X, domain=field)
    spaces = []
    for z in sorted(int(root) % p for root in charpoly.ground_roots()):
        shifted = [[(v - z) % p if i == j else v for j, v in enumerate(row)] for i, row in enumerate(transposed)]
        basis = DomainMatrix.from_list(shifted, field).nullspace()
        if basis.shape[0] == 0:
            continue
        basis, _ = basis.rref()
        spaces.append(_ints(basis, p))
    if sum(len(space) for space in spaces) != d:
        raise PrimeSearchError(f'Class matrix does not split over GF({p})')
    return spaces


def common_eigenvectors(a, p):
    """Split GF(p)^k by the class matrices until every space is a line."""
    field = GF(p)
    k = len(a)
    spaces = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    for r in range(1, k):
        if all(len(space) == 1 for space in spaces):
            break
        M = a[r]
        refined = []
        for space in spaces:
            if len(space) == 1:
                refined.append(space)
                continue
            _, pivots = DomainMatrix.from_list(space, field).rref()
            R = [
                [sum(row[t] * M[q][t] for t in range(k)) % p for q in pivots]
                for row in space
            ]
            for coefficients in _left_eigenspaces(R, field, p):
                refined.append([
                    [sum(c[i] * space[i][t] for i in range(len(space))) % p for t in range(k)]
                    for c in coefficients
                ])
        spaces = refined
    if not all(len(space) == 1 for space in spaces):
        raise PrimeSearchError(f'Class matrices have no common eigenbasis over GF({p})')
    return [space[0] for space in spaces]


def normalize(G, vector, p):
    """Residues of chi(z_t) from a common eigenvector, scaled so that chi(1) is the positive square root."""
    sizes = G.class_sizes
    inverse_classes = G.inverse_classes
    scale = pow(vector[0], -1, p)
    u = [v * scale * pow(size, -1, p) % p for v, size in zip(vector, sizes)]
    dot = sum(size * u[t] * u[inverse_classes[t]] for t, size in enumerate(sizes)) % p
    if dot == 0:
        raise PrimeSearchError(f'Degenerate eigenvector over GF({p})')
    root = sqrt_mod(G.order * pow(dot, -1, p) % p, p)
    if root is None:
        raise PrimeSearchError(f'Degree square has no root in GF({p})')
    degree = min(int(root), p - int(root))
    return [x * degree % p for x in u]


def lift(G, rows, p, exponent):
    """Lift residue rows to Z[zeta_exponent], each value an element of ``cyclotomic_field(exponent)``."""
    field = GF(p)
    dom = cyclotomic_field(exponent)
    x = pow(int(primitive_root(p)), (p - 1) // exponent, p)
    units = [a for a in range(exponent) if gcd(a, exponent) == 1]
    vandermonde = DomainMatrix([[field(pow(x, a * i, p)) for i in range(len(units))] for a in units],
                               (len(units), len(units)), field)
    inverse = vandermonde.inv()
    power_maps = [G.power_map(a) for a in units]
    half = p // 2
    characters = []
    for row in rows:
        values = []
        for t in range(len(G.classes)):
            residues = DomainMatrix([[field(row[pm[t]])] for pm in power_maps], (len(units), 1), field)
            coords = [int(c) % p for c in (inverse * residues).to_list_flat()]
            coords = [c if c <= half else c - p for c in coords]
            if dom is QQ:
                element = QQ(coords[0])
            else:
                element = ANP(coords[::-1], dom.mod, QQ)
            values.append(Cyclotomic.from_anp(exponent, element))
        characters.append(ClassFunction(G, values))
    return characters


def compute_table(G):
    """The character table of G, checked against both orthogonality relations.

    Raises:
        GroupOrderError: If G is larger than the configured bound
        PrimeSearchError: If the modular computation fails or its lift does not verify
    """
    classes = G.classes
    exponent = G.exponent
    p = dixon_prime(G.order, exponent, max(c.size for c in classes))
    logger.info('%s: %d classes, exponent %d, working modulo %d', G.name, len(classes), exponent, p)
    vectors = common_eigenvectors(class_matrices(G), p)
    rows = [normalize(G, v, p) for v in vectors]
    table = CharacterTable(G, lift(G, rows, p, exponent), exponent)
    if not table.check_orthogonality():
        raise PrimeSearchError(f'Lifted table of {G.name} modulo {p} fails orthogonality')
    return table
