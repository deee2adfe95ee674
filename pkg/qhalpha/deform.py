# -*- coding: utf-8 -*-
'''Candidate tau-bases of QH_alpha,

    tau_lam = sigma_lam + sum a_{lam,mu} q^((|lam| - |mu|)/n) sigma_mu,

their structure constants, a search for negative constants, and the
certificates showing that every non-zero choice of the a_{lam,mu} breaks
non-negativity (one certificate for alpha > 0, one for alpha = 0).
'''

from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pandas as pd

from qhalpha import converters
from qhalpha.exceptions import DomainError
from qhalpha.partitions import (Partition, partitions_in_box, deg_lex_key,
                                add_vertical_strips, remove_first_column,
                                dual_partition)
from qhalpha.QuantumRing import QuantumRing, QClass, StructureConstantTable
from qhalpha.seidel import shift, find_separating_shift
from qhalpha.utils import get_logger, to_fraction

logger = get_logger(__name__)

POSITIVE = 'positive'
CLASSICAL = 'classical'


def admissible_pairs(params):
    '''Pairs (lam, mu) inside the box with |lam| - |mu| a positive multiple
    of n, sorted deg-lex on lam then mu.
    '''
    parts = partitions_in_box(params.box)
    pairs = [(lam, mu) for lam in parts for mu in parts
             if lam.weight > mu.weight and (lam.weight - mu.weight) % params.n == 0]

    return sorted(pairs, key=lambda pair: (deg_lex_key(pair[0]), deg_lex_key(pair[1])))


class DeformationCoeffs(object):
    '''The numbers a_{lam,mu} of a candidate tau-basis, keyed by admissible
    pairs only. Missing pairs read 0.
    '''

    def __init__(self, params, coeffs=None):
        self.params = params
        self.coeffs = {}
        for (lam, mu), value in (coeffs or {}).items():
            self.set(lam, mu, value)

    @classmethod
    def from_entries(cls, params, entries):
        '''Build from (lam, mu, value) triples as returned by
        converters.read_deformation_file(). Repeated pairs are an error.
        '''
        coeffs = cls(params)
        seen = set()
        for lam, mu, value in entries:
            key = (Partition(lam), Partition(mu))
            if key in seen:
                raise DomainError('Coefficient for ({}, {}) given twice'.format(*key))
            seen.add(key)
            coeffs.set(lam, mu, value)
        return coeffs

    def set(self, lam, mu, value):
        box = self.params.box
        lam, mu = box.check(lam), box.check(mu)
        difference = lam.weight - mu.weight
        if difference <= 0 or difference % self.params.n:
            raise DomainError('({}, {}) is not admissible: |lambda| - |mu| = {} is not a '
                              'positive multiple of n = {}'.format(lam, mu, difference,
                                                                   self.params.n))
        value = to_fraction(value)
        if value:
            self.coeffs[(lam, mu)] = value
        else:
            self.coeffs.pop((lam, mu), None)

    def get(self, lam, mu):
        return self.coeffs.get((Partition(lam), Partition(mu)), Fraction(0))

    def is_zero(self):
        return not self.coeffs

    def __repr__(self):
        return 'DeformationCoeffs({}, {})'.format(self.params, ', '.join(
               'a[{};{}]={}'.format(converters.partition_to_text(lam),
                                    converters.partition_to_text(mu), v)
               for (lam, mu), v in sorted(self.coeffs.items())))


def tau_class(coeffs, lam):
    '''tau_lam expanded on the sigma basis.
    '''
    params = coeffs.params
    lam = params.box.check(lam)
    terms = {(0, lam): 1}
    for (lam2, mu), value in coeffs.coeffs.items():
        if lam2 == lam:
            terms[((lam.weight - mu.weight) // params.n, mu)] = value

    return QClass(params, terms)


def tau_to_sigma(coeffs, x):
    '''x holds coordinates on the tau basis; return the same element on the
    sigma basis.
    '''
    result = QClass(coeffs.params)
    for (d, lam), c in x:
        result._add_scaled(tau_class(coeffs, lam), c, d)
    return result


def sigma_to_tau(coeffs, x):
    '''Inverse of tau_to_sigma. The change of basis is unitriangular with
    respect to |lambda|, so peeling off the heaviest term repeatedly ends.
    '''
    remaining = QClass(coeffs.params)._add_scaled(x)
    result = QClass(coeffs.params)
    while remaining:
        (d, lam), c = max(remaining.terms(),
                          key=lambda term: (term[0][1].weight, term[0][0], tuple(term[0][1])))
        result._put((d, lam), c)
        remaining._add_scaled(tau_class(coeffs, lam), -c, d)

    return result


def tau_structure_constants(coeffs):
    '''Return StructureConstantTable of the tau-basis: tau_lam * tau_mu is
    multiplied on the sigma side and converted back.
    '''
    ring = QuantumRing.from_params(coeffs.params)
    table = StructureConstantTable(coeffs.params)
    parts = ring.partitions()
    for lam in parts:
        for mu in parts:
            product = ring.multiply(tau_class(coeffs, lam), tau_class(coeffs, mu))
            table.add_product(lam, mu, sigma_to_tau(coeffs, product))

    return table


Violation = namedtuple('Violation', 'lam mu nu d value')


class NegativityReport(namedtuple('NegativityReport', 'params violations')):
    '''Negative tau structure constants, ascending in (d, lam, mu, nu).
    '''
    __slots__ = ()

    @property
    def is_nonnegative(self):
        return not self.violations

    def to_dataframe(self):
        return pd.DataFrame([{'lambda': converters.partition_to_text(v.lam),
                              'mu': converters.partition_to_text(v.mu),
                              'nu': converters.partition_to_text(v.nu),
                              'd': v.d, 'value': v.value} for v in self.violations],
                            columns=['lambda', 'mu', 'nu', 'd', 'value'])


def check_nonnegative(coeffs):
    table = tau_structure_constants(coeffs)
    violations = [Violation(*row) for row in table.negative_entries()]
    if violations:
        logger.warning('%s negative structure constants for %s', len(violations), coeffs)

    return NegativityReport(coeffs.params, violations)


PositiveWitness = namedtuple('PositiveWitness', 'lam mu p d e_prime verified')
ClassicalClaim = namedtuple('ClassicalClaim', 'claim subject verified')


class CertificateReport(namedtuple('CertificateReport', 'params branch records')):
    __slots__ = ()

    @property
    def verified(self):
        return all(r.verified for r in self.records)

    def failures(self):
        return [r for r in self.records if not r.verified]

    def to_dataframe(self):
        if self.branch == POSITIVE:
            return pd.DataFrame([{'lambda': converters.partition_to_text(r.lam),
                                  'mu': converters.partition_to_text(r.mu),
                                  'p': r.p, 'd': r.d, 'e_prime': r.e_prime,
                                  'verified': r.verified} for r in self.records],
                                columns=['lambda', 'mu', 'p', 'd', 'e_prime', 'verified'])
        return pd.DataFrame([{'claim': r.claim,
                              'subject': ' '.join(converters.partition_to_text(s)
                                                  for s in r.subject),
                              'verified': r.verified} for r in self.records],
                            columns=['claim', 'subject', 'verified'])


def _run(work, items, jobs):
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(work, items))
    return [work(item) for item in items]


def certify_positive_branch(params, jobs=1):
    '''For every admissible pair (lam, mu) find the Seidel shift p with
    |lam^p| < |mu^p|. Multiplying tau_lam by c_m^p gives a multiple of
    q^d, while the a_{lam,mu} term only carries q^e' with e' < d.
    '''
    if params.alpha <= 0:
        raise DomainError('The positive branch needs alpha > 0, got {}'.format(params.alpha))
    ring = QuantumRing.from_params(params)
    box, m, n = params.box, params.m, params.n

    def work(pair):
        lam, mu = pair
        p = find_separating_shift(lam, mu, box).p
        lam_p, mu_p = shift(lam, p, box), shift(mu, p, box)
        d = Fraction(m * p + lam.weight - lam_p.weight, n)
        e_prime = (Fraction(lam.weight - mu.weight, n)
                   + Fraction(m * p + mu.weight - mu_p.weight, n))
        verified = (d.denominator == 1 and e_prime.denominator == 1
                    and 0 <= e_prime < d
                    and d - e_prime == Fraction(mu_p.weight - lam_p.weight, n))
        if verified:
            chain = ring.chern_power(p, lam)
            verified = chain == ring.sigma(lam_p, int(d), params.alpha ** int(d))
        logger.debug('Pair (%s, %s): p=%s d=%s e_prime=%s verified=%s',
                     lam, mu, p, d, e_prime, verified)
        return PositiveWitness(lam, mu, p, d, e_prime, verified)

    pairs = admissible_pairs(params)
    logger.info('Certifying %s admissible pairs of %s (positive branch)', len(pairs), params)
    report = CertificateReport(params, POSITIVE, _run(work, pairs, jobs))
    if not report.verified:
        logger.warning('Positive branch failed for %s pairs', len(report.failures()))

    return report


def _dual_product(ring, nu, x):
    '''sigma_{nu^v_1} * ... * sigma_{nu^v_m} * x.
    '''
    for s in dual_partition(nu, ring.box):
        x = ring.apply_special(s, x)
        if not x:
            break
    return x


def certify_classical_branch(params, jobs=1):
    '''Check, in the classical ring, the product identities the alpha = 0
    argument rests on:

        column-maximum:   lam is the deg-lex largest vertical strip of
                          l(lam) boxes added to lam minus its first column,
                          and c_l sigma_lamhat contains sigma_lam once
        dual-product:     sigma_{nu^v_1} ... sigma_{nu^v_m} sigma_nu = sigma_(k^m)
        lex-vanishing:    the same product against sigma_mu is 0 when
                          |mu| = |nu|, mu != nu and nu^v >lex mu^v
        degree-vanishing: the same product against sigma_mu is 0 when
                          |nu| < |mu|
    '''
    if params.alpha != 0:
        raise DomainError('The classical branch needs alpha = 0, got {}'.format(params.alpha))
    ring = QuantumRing.from_params(params)
    box = params.box
    parts = ring.partitions()
    full = ring.sigma(box.full())

    def column_claim(lam):
        lam_hat = remove_first_column(lam)
        strips = [mu for mu in add_vertical_strips(lam_hat, lam.length, box.m)
                  if box.contains(mu)]
        verified = (max(strips, key=deg_lex_key) == lam
                    and ring.pieri_chern(lam.length, lam_hat).coefficient(lam) == 1)
        return [ClassicalClaim('column-maximum', (lam,), verified)]

    def dual_claims(nu):
        claims = [ClassicalClaim('dual-product', (nu,),
                                 _dual_product(ring, nu, ring.sigma(nu)) == full)]
        nu_dual = dual_partition(nu, box)
        for mu in parts:
            if mu == nu:
                continue
            if mu.weight == nu.weight and tuple(nu_dual) > tuple(dual_partition(mu, box)):
                claim = 'lex-vanishing'
            elif nu.weight < mu.weight:
                claim = 'degree-vanishing'
            else:
                continue
            claims.append(ClassicalClaim(claim, (nu, mu),
                                         not _dual_product(ring, nu, ring.sigma(mu))))
        return claims

    logger.info('Certifying %s partitions of %s (classical branch)', len(parts), params)
    records = []
    for claims in _run(column_claim, [lam for lam in parts if lam], jobs):
        records.extend(claims)
    for claims in _run(dual_claims, parts, jobs):
        records.extend(claims)
    report = CertificateReport(params, CLASSICAL, records)
    if not report.verified:
        logger.warning('Classical branch failed for %s claims', len(report.failures()))

    return report
