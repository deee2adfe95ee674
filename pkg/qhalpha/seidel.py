# -*- coding: utf-8 -*-
# Seidel shifts of partitions in the m x k box. The single step is
#   lam^1 = (lam_1+1, ..., lam_m+1)   if lam_1 < k
#   lam^1 = (lam_2, ..., lam_m, 0)    if lam_1 = k
# and has order n = m + k.

from collections import namedtuple
from fractions import Fraction

from qhalpha.exceptions import PreconditionViolated, InternalInconsistency
from qhalpha.partitions import Partition


def _step(lam, box):
    if lam.part(1) < box.k:
        return Partition(lam.part(i) + 1 for i in range(1, box.m + 1))
    return Partition(lam.part(i) for i in range(2, box.m + 1))


def shift(lam, p, box):
    '''p-th Seidel shift of lam; negative p shifts down. p is reduced mod n
    first, so at most n - 1 single steps are taken.
    '''
    lam = box.check(lam)
    for _ in range(p % box.n):
        lam = _step(lam, box)
    return lam


def shift_exponent(lam, p, box):
    '''(m p + |lam| - |lam^p|) / n, the power of alpha q in
    c_m^p sigma_lam, for p >= 0.
    '''
    lam = box.check(lam)
    value = Fraction(box.m * p + lam.weight - shift(lam, p, box).weight, box.n)
    if value.denominator != 1 or value < 0:
        raise InternalInconsistency('Seidel exponent {} for {} shifted {} times is not '
                                    'a non-negative integer'.format(value, lam, p))
    return int(value)


class SeidelOrbit(namedtuple('SeidelOrbit', 'base box shifts weights')):
    '''The n-cycle lam^0, ..., lam^(n-1) with weights. The constructor checks
    that the cycle closes and that the weights sum to kmn/2.
    '''
    __slots__ = ()

    def __new__(cls, base, box, shifts, weights):
        shifts = tuple(shifts)
        weights = tuple(weights)
        if len(shifts) != box.n or shifts[0] != base or _step(shifts[-1], box) != base:
            raise InternalInconsistency('Seidel orbit of {} does not close after {} steps'.format(
                                        base, box.n))
        if 2 * sum(weights) != box.k * box.m * box.n:
            raise InternalInconsistency('Seidel orbit of {} has weight sum {}, expected {}'.format(
                                        base, sum(weights), Fraction(box.k * box.m * box.n, 2)))
        return super(SeidelOrbit, cls).__new__(cls, base, box, shifts, weights)

    @property
    def weight_sum(self):
        return sum(self.weights)


def orbit(lam, box):
    lam = box.check(lam)
    shifts = [lam]
    for _ in range(box.n - 1):
        shifts.append(_step(shifts[-1], box))

    return SeidelOrbit(lam, box, shifts, [s.weight for s in shifts])


SeparatingShift = namedtuple('SeparatingShift', 'p lambda_weight mu_weight')


def find_separating_shift(lam, mu, box):
    '''Smallest p in 0..n-1 with |lam^p| < |mu^p|, for |lam| > |mu|.
    '''
    lam, mu = box.check(lam), box.check(mu)
    if lam.weight <= mu.weight:
        raise PreconditionViolated('Need |lambda| > |mu|, got |{}| = {} and |{}| = {}'.format(
                                   lam, lam.weight, mu, mu.weight))
    lam_orbit, mu_orbit = orbit(lam, box), orbit(mu, box)
    for p in range(box.n):
        if lam_orbit.weights[p] < mu_orbit.weights[p]:
            return SeparatingShift(p, lam_orbit.weights[p], mu_orbit.weights[p])

    raise InternalInconsistency('No separating Seidel shift for {} and {}'.format(lam, mu))
