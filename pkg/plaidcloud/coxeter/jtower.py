#!/usr/bin/env python
# coding=utf-8
"""
Piece index sets ^{eps(J)}W and the reduction tower J ⊇ J_1 ⊇ ... ⊇ J_∞.

A step takes (J, w) to (J_1, w): with w_0 the minimal element of W_{eps(J)} w W_J,
J_1 is the set of s in J such that eps(s) = w_0 t w_0^-1 for some t in J. The element w
itself is carried unchanged; only its double coset minimum is recomputed per floor.
"""

import logging
from dataclasses import dataclass

from plaidcloud.coxeter.coxcore import DYNKIN, InvalidDatumError, NotMinimalError, subset_labels

__author__ = 'Paul Morel'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class TowerChain:
    eps: object
    start: frozenset
    w: object
    steps: tuple
    j_infinity: frozenset

    @property
    def subsets(self):
        return [subset for _, subset in self.steps]

    def to_json(self):
        return {
            'eps': str(self.eps),
            'start': subset_labels(self.start),
            'w': self.w.to_json(),
            'steps': [{'w0': w0.to_json(), 'J': subset_labels(subset)} for w0, subset in self.steps],
            'j_infinity': subset_labels(self.j_infinity),
        }


def _require_dynkin(datum, eps):
    if eps.level != DYNKIN or not datum.is_automorphism(eps):
        raise InvalidDatumError(f'{eps} is not a dynkin automorphism of {datum.name}')


def _require_piece_index(datum, J, w, eps):
    if not datum.is_min_left_coset_rep(w, eps.apply(J)):
        raise NotMinimalError(
            f'{w} is not a minimal representative in ^eps(J)W for J={subset_labels(J)}, eps={eps}'
        )


def piece_indices(datum, J, eps):
    """The index set ^{eps(J)}W of the partition into pieces."""
    _require_dynkin(datum, eps)
    return datum.coset_reps(eps.apply(J))


def is_stable_pair(datum, J, w, eps):
    """True iff Ad(w)J is a set of simple reflections equal to eps(J).

    Raises:
        NotMinimalError: If w is not in ^{eps(J)}W
    """
    J = frozenset(J)
    _require_piece_index(datum, J, w, eps)
    return datum.ad_simple_subset(w, J) == eps.apply(J)


def next_subset(datum, J, w0, eps):
    """J_1 = {s in J : eps(s) = Ad(w0)t for some t in J}."""
    targets = datum.conjugate_intersection(eps.apply(J), w0, J)
    return frozenset(s for s in J if eps(s) in targets)


def j_infinity(datum, J, w, eps):
    """Iterate the reduction until the subset stops shrinking.

    The final stationary floor is recorded too, so a pair that is already stable gives a single step.

    Returns:
        TowerChain: steps of (w_0 of the floor, subset of the floor)
    """
    J = frozenset(J)
    _require_dynkin(datum, eps)
    _require_piece_index(datum, J, w, eps)
    steps = []
    current = J
    while True:
        w0 = datum.min_double_coset_rep(eps.apply(current), w, current)
        steps.append((w0, current))
        following = next_subset(datum, current, w0, eps)
        if following == current:
            break
        current = following
    logger.debug('Tower from %s at %s stabilized after %d steps', subset_labels(J), w, len(steps))
    return TowerChain(eps=eps, start=J, w=w, steps=tuple(steps), j_infinity=current)


def cw_set(datum, J, eps):
    """The stable piece indices {w in ^{eps(J)}W : Ad(w)J = eps(J)}.

    For eps = id this is a subgroup; closure is checked and a failure raises.
    """
    J = frozenset(J)
    target = eps.apply(J)
    found = tuple(
        w for w in piece_indices(datum, J, eps)
        if datum.ad_simple_subset(w, J) == target
    )
    if eps.is_identity and not is_closed(datum, found):
        raise ArithmeticError(f'Stabilizer set of {subset_labels(J)} in {datum.name} is not closed under products')
    return found


def is_closed(datum, elements):
    perms = {w.perm for w in elements}
    return all(datum.multiply(x, y).perm in perms for x in elements for y in elements)


def preserves_simple_roots(datum, w, J):
    """Whether the root permutation of w maps {alpha_s : s in J} onto itself."""
    return {w.perm[s] for s in J} == set(J)
