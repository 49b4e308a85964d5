#!/usr/bin/env python
# coding=utf-8
"""
The commands behind ``coxeter <command>``.

Each command takes a JobSpec and a logger and returns a report fragment::

    {'ok': bool, 'data': ..., 'suites': [Suite.to_json()], 'table': {'header': [...], 'rows': [[...]]}}

The runner adds the schema, command and group spec. Nothing here prints.
"""

import random

from plaidcloud.coxeter import cache, hcduality as hc
from plaidcloud.coxeter.cli.common import CHECK_FAILED, USAGE_ERROR, JobError, Suite, job_command
from plaidcloud.coxeter.config import get_setting
from plaidcloud.coxeter.coxcore import (
    InvalidDatumError, NotMinimalError, build_weyl, format_word, subset_labels,
)
from plaidcloud.coxeter.extgroups import (
    ExtensionError, affine_datum, build_extension, certify_all_cosets, diagram_extension, invariant_extension_check,
    omega as build_omega, omega_k, omega_trichotomy, special_subset_by_length, subsystem,
)
from plaidcloud.coxeter.functions import format_subset, subsets
from plaidcloud.coxeter.grouptab import GroupOrderError, weyl_group
from plaidcloud.coxeter.hecke import HeckeAlgebra, ParameterError, sp_model as build_sp_model
from plaidcloud.coxeter.jtower import is_stable_pair, j_infinity, piece_indices
from plaidcloud.coxeter.laurent import V

__author__ = 'Paul Morel'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel', 'Adams Tower', 'Pat Buxton']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'

# Omega orders by series, for the long reflection class
OMEGA_ORDERS = {'B': 2, 'C': 2, 'E6': 3, 'E7': 2, 'E8': 1, 'F4': 1, 'G2': 1}


def _fmt(J):
    return format_subset(subset_labels(J))


def _report(suites=(), data=None, table=None):
    suites = list(suites)
    return {
        'ok': all(s.ok for s in suites),
        'data': data,
        'suites': [s.to_json() for s in suites],
        'table': table or {'header': [], 'rows': []},
    }


def _context(spec, datum):
    try:
        return hc.ParabolicContext(datum, spec.automorphism(datum))
    except hc.SubsetError as exc:
        raise JobError(str(exc), data=spec.group_spec(), code=USAGE_ERROR)


def _stable(ctx, J):
    try:
        return ctx.check_subset(J)
    except hc.SubsetError as exc:
        raise JobError(str(exc), data={'J': subset_labels(J)}, code=USAGE_ERROR)


def _top_subsets(spec, ctx):
    J = spec.subset('J')
    return [_stable(ctx, J)] if J is not None else ctx.eps_stable_subsets()


def _automorphism_sweep(datum):
    return datum.diagram_automorphisms()


# Suites shared by the single commands and verify-all

def duality_suites(ctx, tops, log):
    spec = {'type': ctx.datum.name, 'eps': str(ctx.eps)}
    involution = Suite('duality.involution', log)
    adjoint = Suite('duality.self_adjoint', log)
    isometry = Suite('duality.isometry', log)
    commutes = Suite('duality.commutes_with_induction', log)
    irreducible = Suite('duality.irreducibles', log)
    curtis = Suite('duality.sign_twist', log)
    for J in tops:
        basis = ctx.coset_basis(J)
        images = [hc.duality(ctx, J, phi) for phi in basis]
        for i, (phi, image) in enumerate(zip(basis, images)):
            involution.check(hc.duality(ctx, J, image) == phi, dict(spec, J=subset_labels(J), basis=i))
            for j, psi in enumerate(basis):
                where = dict(spec, J=subset_labels(J), basis=[i, j])
                adjoint.check(ctx.inner_product(image, psi) == ctx.inner_product(phi, images[j]), where)
                isometry.check(ctx.inner_product(image, images[j]) == ctx.inner_product(phi, psi), where)
        for K in ctx.eps_stable_subsets(J):
            if K == J:
                continue
            for i, phi in enumerate(ctx.coset_basis(K)):
                lhs = hc.duality(ctx, J, hc.hc_induce(ctx, K, J, phi))
                rhs = hc.hc_induce(ctx, K, J, hc.duality(ctx, K, phi))
                commutes.check(lhs == rhs, dict(spec, J=subset_labels(J), K=subset_labels(K), basis=i))
        for i, chi in enumerate(ctx.irreducibles(J)):
            try:
                hc.duality_on_irreducible(ctx, chi)
                irreducible.check(True)
            except hc.NotIrreducibleError:
                irreducible.check(False, dict(spec, J=subset_labels(J), irreducible=i))
        if ctx.eps.is_identity and J == ctx.I:
            sign = ctx.sign_character(J)
            for i, chi in enumerate(ctx.irreducibles(J)):
                expected = hc.CosetClassFunction(J, chi.function * sign.function)
                curtis.check(hc.duality(ctx, J, chi) == expected, dict(spec, irreducible=i))
    return [involution, adjoint, isometry, commutes, irreducible, curtis]


def mackey_suites(ctx, tops, log):
    datum = ctx.datum
    spec = {'type': datum.name, 'eps': str(ctx.eps)}
    mackey = Suite('mackey.formula', log)
    positive = Suite('mackey.m_u_nonnegative', log)
    identity = Suite('mackey.m_u_identity', log)
    root_count = Suite('mackey.root_count', log)
    for J in tops:
        nested = ctx.eps_stable_subsets(J)
        for K in nested:
            basis = ctx.coset_basis(K)
            for K2 in nested:
                where = dict(spec, J=subset_labels(J), K=subset_labels(K), K2=subset_labels(K2))
                for i, phi in enumerate(basis):
                    lhs = hc.mackey_lhs(ctx, K, K2, J, phi)
                    mackey.check(lhs == hc.mackey_rhs(ctx, K, K2, J, phi), dict(where, basis=i))
                for u, _, _ in hc.double_coset_terms(ctx, K, K2, J):
                    value = hc.m_u(ctx, K, K2, J, u)
                    positive.check(value >= 0, dict(where, u=format_word(u.word), m_u=value))
                    if len(datum.simples) <= 3:
                        first, second = hc.root_count_pair(ctx, K, K2, J, u)
                        root_count.check(first == second, dict(where, u=format_word(u.word), counts=[first, second]))
        identity.check(hc.m_u(ctx, J, J, J, datum.identity) == 0, dict(spec, J=subset_labels(J)))
    return [mackey, positive, identity, root_count]


def sign_sum_suite(ctx, tops, log):
    suite = Suite('signsum', log)
    for J in tops:
        for K in ctx.eps_stable_subsets(J):
            for H in ctx.eps_stable_subsets(K):
                value = hc.sign_sum(ctx, H, K, J)
                suite.check(value == ctx.orbit_sign(H), {
                    'type': ctx.datum.name, 'eps': str(ctx.eps),
                    'H': subset_labels(H), 'K': subset_labels(K), 'J': subset_labels(J), 'value': value,
                })
    return suite


def jtower_suite(datum, eps, log):
    suite = Suite('jtower', log)
    order = datum.order
    for J in subsets(datum.simples):
        indices = piece_indices(datum, J, eps)
        suite.check(
            len(indices) * datum.parabolic_order(J) == order,
            {'type': datum.name, 'eps': str(eps), 'J': subset_labels(J), 'pieces': len(indices)},
        )
        for w in indices:
            chain = j_infinity(datum, J, w, eps)
            w_final = chain.steps[-1][0]
            holds = len(chain.steps) - 1 <= len(J) and is_stable_pair(datum, chain.j_infinity, w_final, eps)
            suite.check(holds, {'type': datum.name, 'eps': str(eps), 'J': subset_labels(J), 'w': format_word(w.word)})
    return suite


def series_suites(ctx, tops, log):
    complete = Suite('series.complete', log)
    orthogonal = Suite('series.orthogonal', log)
    sign = Suite('series.sign', log)
    blocks = []
    for J in tops:
        where = {'type': ctx.datum.name, 'eps': str(ctx.eps), 'J': subset_labels(J)}
        checks = hc.series_checks(ctx, J)
        complete.check(checks['complete'], dict(where, **checks))
        orthogonal.check(checks['orthogonal'], where)
        for entry in hc.series_sign(ctx, J):
            sign.check(entry['holds'], dict(where, **entry))
        blocks.append({
            'J': subset_labels(J),
            'series': [
                {'subsets': [subset_labels(H) for H in b.subsets], 'dimension': b.dimension}
                for b in hc.hc_series(ctx, J)
            ],
        })
    return [complete, orthogonal, sign], blocks


def table_suite(G, log):
    suite = Suite(f'table.{G.name}', log)
    table = G.character_table()
    suite.check(table.check_orthogonality(), {'group': G.name, 'order': G.order})
    return suite, table


def hecke_suites(algebra, count, seed, log):
    datum = algebra.datum
    spec = {'type': datum.name, 'params': [str(c) for c in algebra.params]}
    quadratic = Suite('hecke.quadratic', log)
    for s in datum.simples:
        quadratic.check(algebra.quadratic_holds(s), dict(spec, s=s + 1))
    associative = Suite('hecke.associativity', log)
    triples = algebra.exhaustive_triples() if len(datum.simples) <= 2 else algebra.random_triples(count, seed)
    for x, y, z in triples:
        a, b, c = algebra.basis(x), algebra.basis(y), algebra.basis(z)
        associative.check((a * b) * c == a * (b * c), dict(spec, triple=[format_word(t.word) for t in (x, y, z)]))
    unit = Suite('hecke.unit', log)
    pairing = Suite('hecke.pairing', log)
    anti = Suite('hecke.anti_multiplicative', log)
    adjunction = Suite('hecke.adjunction', log)
    elements = datum.elements()
    rng = random.Random(seed)
    for w in elements:
        T = algebra.basis(w)
        unit.check(algebra.unit * T == T and T * algebra.unit == T, dict(spec, w=format_word(w.word)))
    if len(elements) <= 48:
        pairs = [(w, w2) for w in elements for w2 in elements]
    else:
        pairs = [(rng.choice(elements), rng.choice(elements)) for _ in range(min(count, 500))]
    for w, w2 in pairs:
        if w2.perm != w.perm:
            value = algebra.pairing(algebra.basis(w), algebra.basis(w2))
            pairing.check(value.is_zero(), dict(spec, pair=[format_word(w.word), format_word(w2.word)]))
    for s in datum.simples:
        T = algebra.basis(datum.simple(s))
        pairing.check(algebra.pairing(T, T) == algebra.params[s], dict(spec, s=s + 1))
    for _ in range(min(count, 200)):
        x, y, z = rng.choice(elements), rng.choice(elements), rng.choice(elements)
        h1, h2, h3 = algebra.basis(x), algebra.basis(y), algebra.basis(z)
        where = dict(spec, triple=[format_word(t.word) for t in (x, y, z)])
        anti.check(algebra.partial(h1 * h2) == algebra.partial(h2) * algebra.partial(h1), where)
        adjunction.check(
            algebra.pairing(h1 * h2, algebra.partial(h3)) == algebra.pairing(algebra.partial(h1), h2 * h3), where
        )
    specialization = Suite('hecke.specialization', log)
    specialization.check(algebra.specialization_holds(), spec)
    return [quadratic, associative, unit, pairing, anti, adjunction, specialization]


def _algebra(spec, datum):
    if spec.params is None:
        return HeckeAlgebra.equal_parameters(datum)
    try:
        exponents = [int(token) for token in str(spec.params).replace(',', ' ').split()]
        return HeckeAlgebra(datum, [V ** e for e in exponents])
    except (ValueError, ParameterError) as exc:
        raise JobError(str(exc), data={'params': spec.params}, code=USAGE_ERROR)


def _count(spec):
    return spec.count if spec.count is not None else get_setting('random_triples', 10000)


# Commands

@job_command('Failed to list coset representatives', 'Minimal length (double) coset representatives')
def coset_reps(spec, log):
    datum = spec.datum()
    J = spec.subset('J', frozenset())
    K = spec.subset('K')
    reps = datum.coset_reps(J, K)
    minimal = Suite('coset_reps.minimal', log)
    for w in reps:
        minimal.check(
            datum.min_double_coset_rep(J, w, K or frozenset()).perm == w.perm,
            {'type': datum.name, 'J': subset_labels(J), 'w': format_word(w.word)},
        )
    suites = [minimal]
    if K is None:
        count = Suite('coset_reps.count', log)
        count.check(len(reps) * datum.parabolic_order(J) == datum.order, {'type': datum.name, 'J': subset_labels(J)})
        suites.append(count)
    data = {'J': subset_labels(J), 'K': subset_labels(K) if K is not None else None, 'reps': [w.to_json() for w in reps]}
    rows = [[str(i), format_word(w.word), str(datum.length(w))] for i, w in enumerate(reps)]
    return _report(suites, data, {'header': ['#', 'word', 'length'], 'rows': rows})


@job_command('Failed to compute the tower', 'The reduction J -> J_1 -> ... for a piece index w')
def jtower(spec, log):
    datum = spec.datum()
    eps = spec.automorphism(datum)
    spec.require('J', 'w')
    J = spec.subset('J')
    w = spec.word('w', datum)
    try:
        chain = j_infinity(datum, J, w, eps)
    except NotMinimalError as exc:
        raise JobError(str(exc), data={'J': subset_labels(J), 'w': spec.w, 'eps': spec.eps})
    suite = Suite('jtower', log)
    suite.check(len(chain.steps) - 1 <= len(J), chain.to_json())
    suite.check(is_stable_pair(datum, chain.j_infinity, chain.steps[-1][0], eps), chain.to_json())
    rows = [[str(i), _fmt(subset), format_word(w0.word)] for i, (w0, subset) in enumerate(chain.steps)]
    data = dict(chain.to_json(), chain=' -> '.join(_fmt(subset) for subset in chain.subsets))
    return _report([suite], data, {'header': ['step', 'J', 'w0'], 'rows': rows})


@job_command('Failed to check the duality', 'Duality laws on coset class functions')
def duality(spec, log):
    datum = spec.datum()
    ctx = _context(spec, datum)
    suites = duality_suites(ctx, _top_subsets(spec, ctx), log)
    rows = [[s.name, str(s.checked), 'ok' if s.ok else 'FAIL'] for s in suites]
    return _report(suites, None, {'header': ['suite', 'checked', 'status'], 'rows': rows})


@job_command('Failed to check the Mackey formula', 'Mackey formula and m_u counts')
def mackey(spec, log):
    datum = spec.datum()
    ctx = _context(spec, datum)
    if spec.K is not None and spec.K2 is not None:
        J = _stable(ctx, spec.subset('J', ctx.I))
        K = _stable(ctx, spec.subset('K'))
        K2 = _stable(ctx, spec.subset('K2'))
        terms = hc.double_coset_terms(ctx, K, K2, J)
        rows = [
            [format_word(u.word), _fmt(L), _fmt(L2), str(hc.m_u(ctx, K, K2, J, u))] for u, L, L2 in terms
        ]
        suite = Suite('mackey.formula', log)
        for i, phi in enumerate(ctx.coset_basis(K)):
            suite.check(
                hc.mackey_lhs(ctx, K, K2, J, phi) == hc.mackey_rhs(ctx, K, K2, J, phi),
                {'type': datum.name, 'J': subset_labels(J), 'K': subset_labels(K), 'K2': subset_labels(K2), 'basis': i},
            )
        return _report([suite], {'terms': len(terms)}, {'header': ['u', 'L', 'L2', 'm_u'], 'rows': rows})
    suites = mackey_suites(ctx, _top_subsets(spec, ctx), log)
    rows = [[s.name, str(s.checked), 'ok' if s.ok else 'FAIL'] for s in suites]
    return _report(suites, None, {'header': ['suite', 'checked', 'status'], 'rows': rows})


@job_command('Failed to compute the sign sum', 'Alternating sums over double cosets')
def signsum(spec, log):
    datum = spec.datum()
    ctx = _context(spec, datum)
    if spec.H is not None and spec.K is not None:
        J = _stable(ctx, spec.subset('J', ctx.I))
        K = _stable(ctx, spec.subset('K'))
        H = _stable(ctx, spec.subset('H'))
        value = hc.sign_sum(ctx, H, K, J)
        suite = Suite('signsum', log)
        suite.check(value == ctx.orbit_sign(H), {'H': subset_labels(H), 'K': subset_labels(K), 'J': subset_labels(J)})
        row = [_fmt(H), _fmt(K), _fmt(J), str(value)]
        return _report([suite], {'value': value}, {'header': ['H', 'K', 'J', 'sum'], 'rows': [row]})
    suite = sign_sum_suite(ctx, _top_subsets(spec, ctx), log)
    return _report([suite], None, {'header': ['suite', 'checked'], 'rows': [[suite.name, str(suite.checked)]]})


@job_command('Failed to compute cuspidal functions', 'Cuspidal coset class functions')
def cuspidal(spec, log):
    datum = spec.datum()
    ctx = _context(spec, datum)
    suite = Suite('cuspidal.vanishing', log)
    rows = []
    data = []
    for J in _top_subsets(spec, ctx):
        basis = hc.cuspidal_space(ctx, J)
        for i, phi in enumerate(basis):
            for H in ctx.eps_stable_subsets(J):
                if H != J:
                    suite.check(
                        hc.hc_restrict(ctx, J, H, phi).is_zero(),
                        {'type': datum.name, 'J': subset_labels(J), 'H': subset_labels(H), 'basis': i},
                    )
        rows.append([_fmt(J), str(len(basis))])
        data.append({'J': subset_labels(J), 'dimension': len(basis), 'basis': [phi.to_json() for phi in basis]})
    return _report([suite], data, {'header': ['J', 'cuspidal dim'], 'rows': rows})


@job_command('Failed to compute the series', 'Harish-Chandra series decomposition and duality signs')
def series(spec, log):
    datum = spec.datum()
    ctx = _context(spec, datum)
    tops = [_stable(ctx, spec.subset('J'))] if spec.J is not None else [ctx.I]
    suites, blocks = series_suites(ctx, tops, log)
    rows = [
        [format_subset(block['J']), format_subset(entry['subsets'][0]), str(entry['dimension'])]
        for block in blocks for entry in block['series']
    ]
    return _report(suites, blocks, {'header': ['J', 'series of', 'dim'], 'rows': rows})


@job_command('Failed to check the Hecke algebra', 'Hecke algebra relations, pairing and specialization')
def hecke(spec, log):
    datum = spec.datum()
    algebra = _algebra(spec, datum)
    suites = hecke_suites(algebra, _count(spec), spec.seed, log)
    rows = [[s.name, str(s.checked), 'ok' if s.ok else 'FAIL'] for s in suites]
    data = {'params': [c.to_json() for c in algebra.params]}
    return _report(suites, data, {'header': ['suite', 'checked', 'status'], 'rows': rows})


@job_command('Failed to build the model', 'The type B Hecke algebra attached to (n, k)')
def sp_model(spec, log):
    spec.require('n', 'k')
    try:
        model = build_sp_model(int(spec.n), int(spec.k))
    except ParameterError as exc:
        raise JobError(str(exc), data={'n': spec.n, 'k': spec.k}, code=USAGE_ERROR)
    suite = Suite('sp_model', log)
    n, k = int(spec.n), int(spec.k)
    suite.check(model.admissible == any(a * a + a == n - k for a in range(n - k + 1)), model.to_json())
    if model.algebra is not None:
        expected = [V ** 2] * (k - 1) + [V ** (4 * model.a + 2)] if k else []
        suite.check(list(model.algebra.params) == expected, model.to_json())
        for s in model.algebra.datum.simples:
            suite.check(model.algebra.quadratic_holds(s), dict(model.to_json(), s=s + 1))
    row = [str(n), str(k), 'yes' if model.admissible else 'no', ' '.join(str(c) for c in model.algebra.params)
           if model.algebra is not None else '']
    return _report([suite], model.to_json(), {'header': ['n', 'k', 'admissible', 'params'], 'rows': [row]})


def _affine(spec, datum):
    try:
        return affine_datum(datum, special_subset_by_length(datum, spec.special))
    except (InvalidDatumError, ExtensionError) as exc:
        raise JobError(str(exc), data=spec.group_spec(), code=USAGE_ERROR)


def _expected_omega(datum, aff):
    norms = {datum.root_norm(k) for k in range(datum.n_positive)}
    if datum.root_norm(min(aff.special.roots)) != max(norms):
        return None
    series, rank, _ = datum.factors[0]
    if series == 'A':
        return rank + 1
    if series == 'D':
        return 4
    return OMEGA_ORDERS.get(series, OMEGA_ORDERS.get(f'{series}{rank}'))


@job_command('Failed to compute Omega', 'The group Omega of the affine diagram')
def omega(spec, log):
    datum = spec.datum()
    aff = _affine(spec, datum)
    om = build_omega(aff, spec.level)
    suites = []
    data = {'affine': aff.to_json(), 'omega': om.to_json()}
    if spec.level == 'root':
        order = Suite('omega.order', log)
        expected = _expected_omega(datum, aff)
        if expected is not None:
            order.check(om.order == expected, {'type': datum.name, 'order': om.order, 'expected': expected})
        suites.append(order)
        trichotomy = Suite('omega.trichotomy', log)
        for eps in (spec.automorphisms(datum) if spec.eps not in (None, 'id') else datum.diagram_automorphisms()):
            try:
                result = omega_trichotomy(aff, eps)
            except ExtensionError:
                continue
            trichotomy.check(result['case'] is not None, result)
            data.setdefault('trichotomy', []).append(result)
        suites.append(trichotomy)
    if spec.K is not None:
        K = aff.parse_nodes(spec.K)
        data['omega_K'] = [[aff.label(x) for x in sigma] for sigma in omega_k(aff, K, spec.level)]
    rows = [[' '.join(aff.label(x) for x in sigma), format_word(w.word)] for sigma, w in om.elements]
    return _report(suites, data, {'header': ['sigma', 'realized by'], 'rows': rows})


def extended_group(spec, datum):
    """The extended group a JobSpec names: W^(K)C<c> when --K is given, else W.Gamma for the --eps list."""
    try:
        if spec.K is not None:
            aff = _affine(spec, datum)
            K = aff.parse_nodes(spec.K)
            sub = subsystem(aff, K)
            eps = spec.automorphism(datum)
            N = int(spec.n) if spec.n is not None else eps.order
            return build_extension(sub, omega_k(aff, K), eps, N)
        return diagram_extension(datum, spec.automorphisms(datum))
    except (ExtensionError, InvalidDatumError) as exc:
        raise JobError(str(exc), data=dict(spec.group_spec(), K=spec.K, n=spec.n), code=USAGE_ERROR)
    except GroupOrderError as exc:
        raise JobError(str(exc), data={'order': exc.order}, code=CHECK_FAILED)


@job_command('Failed to certify quasi-rationality', 'Root of unity certificates on every coset of an extension')
def quasirat(spec, log):
    datum = spec.datum()
    ext = extended_group(spec, datum)
    table_check, table = table_suite(ext.group, log)
    certificates = Suite('quasirat.certificates', log)
    report = certify_all_cosets(ext)
    for entry in report:
        for certificate in entry['certificates']:
            certificates.check(certificate['ok'], dict(certificate, gamma=entry['gamma'], group=ext.name))
    extension = Suite('quasirat.invariant_extension', log)
    invariant = invariant_extension_check(ext)
    for entry in invariant:
        if entry['in_scope']:
            extension.check(entry['extends_rationally'], dict(entry, group=ext.name))
    rows = [
        [entry['gamma'], str(len(entry['certificates'])), 'ok' if entry['ok'] else 'FAIL'] for entry in report
    ]
    data = {
        'group': ext.to_json(),
        'classes': len(ext.group.classes),
        'degrees': table.degrees,
        'cosets': report,
        'invariant': invariant,
    }
    return _report([table_check, certificates, extension], data, {'header': ['gamma', 'characters', 'status'], 'rows': rows})


@job_command('Verification failed to run', 'Run every suite on one type')
def verify_all(spec, log):
    datum = spec.datum()
    suites = []
    count = _count(spec)
    for eps in _automorphism_sweep(datum):
        ctx = hc.ParabolicContext(datum, eps)
        tops = ctx.eps_stable_subsets()
        log.info('Suites for %s with eps=%s', datum.name, eps)
        suites.extend(duality_suites(ctx, tops, log))
        suites.extend(mackey_suites(ctx, tops, log))
        suites.append(sign_sum_suite(ctx, tops, log))
        suites.append(jtower_suite(datum, eps, log))
        if eps.is_identity:
            series_checks, _ = series_suites(ctx, [ctx.I], log)
            suites.extend(series_checks)
    table_check, _ = table_suite(weyl_group(datum), log)
    suites.append(table_check)
    suites.extend(hecke_suites(HeckeAlgebra.equal_parameters(datum), count, spec.seed, log))
    merged = {}
    for suite in suites:
        if suite.name in merged:
            target = merged[suite.name]
            target.checked += suite.checked
            target.failures.extend(suite.failures)
        else:
            merged[suite.name] = suite
    ordered = list(merged.values())
    rows = [[s.name, str(s.checked), 'ok' if s.ok else 'FAIL'] for s in ordered]
    return _report(ordered, {'automorphisms': [str(eps) for eps in _automorphism_sweep(datum)]},
                   {'header': ['suite', 'checked', 'status'], 'rows': rows})


@job_command('Cache command failed', 'Character table cache: status, clear or warm')
def cache_admin(spec, log):
    action = spec.action or 'status'
    suite = Suite(f'cache.{action}', log)
    try:
        if action == 'status':
            data = cache.status()
        elif action == 'clear':
            data = {'removed': cache.clear()}
        elif action == 'warm':
            warmed = []
            for name in spec.groups:
                series, rank = name[0], name[1:]
                if not rank.isdigit():
                    raise JobError(f'Not a group name: {name!r}', code=USAGE_ERROR)
                try:
                    G = weyl_group(build_weyl(series, int(rank)))
                    table = G.character_table()
                except InvalidDatumError as exc:
                    raise JobError(str(exc), data={'group': name}, code=USAGE_ERROR)
                except GroupOrderError as exc:
                    raise JobError(str(exc), data={'group': name, 'order': exc.order}, code=CHECK_FAILED)
                suite.check(table.check_orthogonality(), {'group': name})
                warmed.append({'group': name, 'order': G.order, 'classes': len(G.classes)})
            data = {'warmed': warmed}
        else:
            raise JobError(f'Unknown cache action {action!r}', code=USAGE_ERROR)
    except OSError as exc:
        raise JobError(f'Cache directory unusable: {exc}', code=CHECK_FAILED)
    rows = [[key, str(value)] for key, value in sorted(data.items()) if not isinstance(value, list)]
    rows += [[key, str(len(value))] for key, value in sorted(data.items()) if isinstance(value, list)]
    return _report([suite], data, {'header': ['item', 'value'], 'rows': rows})

